# Copyright 2026 The Genie Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled .ckt corpus.

Each circuit is a list of cards (name, nets..., model). Nets named after a
terminal (VIN1, VDD, ...) are ports; any other name is an internal node.
The script checks pin coverage and the sequence-length budget before writing.
"""

import argparse
import itertools
import pathlib

TERMINALS = (
    [f"VIN{i}" for i in range(1, 6)] + [f"IIN{i}" for i in range(1, 6)] +
    [f"VOUT{i}" for i in range(1, 6)] + [f"IOUT{i}" for i in range(1, 6)] +
    [f"VB{i}" for i in range(1, 6)] + ["LOGICQ1", "LOGICQ2", "LOGICQB1",
                                       "LOGICQB2", "VDD", "VSS"])
ARITY = {"M": 4, "Q": 3, "R": 2, "C": 2, "L": 2, "D": 2}
CELL_ARITY = {"XOR": 5, "INV": 4, "TG": 5}
MAX_EDGES = 511

CIRCUITS = {}


def circuit(name, label):
  def wrap(fn):
    CIRCUITS[name] = (label, fn())
    return fn
  return wrap


def nm(name, d, g, s, b="VSS"):
  return (name, d, g, s, b, "nmos")


def pm(name, d, g, s, b="VDD"):
  return (name, d, g, s, b, "pmos")


def npn(name, c, b, e):
  return (name, c, b, e, "npn")


def pnp(name, c, b, e):
  return (name, c, b, e, "pnp")


def two(name, p, n, value="1"):
  return (name, p, n, value)


def inv(name, a, q):
  return (name, a, q, "VDD", "VSS", "INV")


def tg(name, a, b, c):
  return (name, a, b, c, "VDD", "VSS", "TG")


def xor(name, a, b, y):
  return (name, a, b, "VDD", "VSS", y, "XOR")


def pins(card):
  letter = card[0][0].upper()
  if letter == "X":
    return list(card[1:-1])
  return list(card[1:1 + ARITY[letter]])


def check(name, cards):
  nets = {}
  kinds = []
  for card in cards:
    ps = pins(card)
    letter = card[0][0].upper()
    if letter == "X":
      assert len(ps) == CELL_ARITY[card[-1]], (name, card)
    assert len(set(ps)) > 1, (name, card, "degenerate")
    for p in ps:
      nets.setdefault(p, 0)
      nets[p] += 1
    kinds.append(letter)
  edges = sum(len(pins(c)) for c in cards)
  for net, count in nets.items():
    if net in TERMINALS:
      edges += (count + 1) * count // 2
    else:
      assert count >= 2, (name, net, "floating")
      edges += count * (count - 1) // 2
  assert "VSS" in nets, (name, "no VSS")
  assert edges <= MAX_EDGES, (name, edges)
  return edges


def diff_pair_5t(p, inp, inn, out, tail_bias, tail="t"):
  """NMOS-input five-transistor OTA with a PMOS mirror load."""
  m = f"{p}m"
  return [
      nm(f"M{p}1", m, inp, tail),
      nm(f"M{p}2", out, inn, tail),
      pm(f"M{p}3", m, m, "VDD"),
      pm(f"M{p}4", out, m, "VDD"),
      nm(f"M{p}5", tail, tail_bias, "VSS"),
  ]


@circuit("cs_resistor", "amplifier")
def _():
  return [nm("M1", "VOUT1", "VIN1", "VSS"), two("R1", "VDD", "VOUT1")]


@circuit("cs_current_source", "amplifier")
def _():
  return [nm("M1", "VOUT1", "VIN1", "VSS"), pm("M2", "VOUT1", "VB1", "VDD")]


@circuit("cs_diode_load", "amplifier")
def _():
  return [nm("M1", "VOUT1", "VIN1", "VSS"), pm("M2", "VOUT1", "VOUT1", "VDD")]


@circuit("cs_degenerated", "amplifier")
def _():
  return [nm("M1", "VOUT1", "VIN1", "s"), two("R1", "s", "VSS"),
          two("R2", "VDD", "VOUT1")]


@circuit("cs_pmos_input", "amplifier")
def _():
  return [pm("M1", "VOUT1", "VIN1", "VDD"), nm("M2", "VOUT1", "VB1", "VSS")]


@circuit("source_follower", "amplifier")
def _():
  return [nm("M1", "VDD", "VIN1", "VOUT1"), nm("M2", "VOUT1", "VB1", "VSS")]


@circuit("common_gate", "amplifier")
def _():
  return [nm("M1", "VOUT1", "VB1", "VIN1"), two("R1", "VDD", "VOUT1"),
          nm("M2", "VIN1", "VB2", "VSS")]


@circuit("cascode_amp", "amplifier")
def _():
  return [nm("M1", "x", "VIN1", "VSS"), nm("M2", "VOUT1", "VB1", "x"),
          pm("M3", "VOUT1", "VB2", "VDD")]


@circuit("folded_cascode_stage", "amplifier")
def _():
  return [nm("M1", "x", "VIN1", "VSS"), pm("M2", "x", "VB1", "VDD"),
          pm("M3", "VOUT1", "VB2", "x"), nm("M4", "VOUT1", "VB3", "VSS")]


@circuit("nmos_mirror", "current_mirror")
def _():
  return [nm("M1", "IIN1", "IIN1", "VSS"), nm("M2", "IOUT1", "IIN1", "VSS")]


@circuit("pmos_mirror", "current_mirror")
def _():
  return [pm("M1", "a", "a", "VDD"), pm("M2", "IOUT1", "a", "VDD"),
          nm("M3", "a", "VB1", "VSS")]


@circuit("cascode_mirror", "current_mirror")
def _():
  return [nm("M1", "a", "a", "VSS"), nm("M2", "b", "a", "VSS"),
          nm("M3", "IIN1", "IIN1", "a"), nm("M4", "IOUT1", "IIN1", "b")]


@circuit("wilson_mirror", "current_mirror")
def _():
  return [nm("M1", "IIN1", "a", "VSS"), nm("M2", "a", "a", "VSS"),
          nm("M3", "IOUT1", "IIN1", "a")]


@circuit("widlar_mirror", "current_mirror")
def _():
  return [nm("M1", "IIN1", "IIN1", "VSS"), nm("M2", "IOUT1", "IIN1", "e"),
          two("R1", "e", "VSS")]


@circuit("multi_output_mirror", "current_mirror")
def _():
  return [nm("M1", "IIN1", "IIN1", "VSS"), nm("M2", "IOUT1", "IIN1", "VSS"),
          nm("M3", "IOUT2", "IIN1", "VSS"), nm("M4", "IOUT3", "IIN1", "VSS")]


@circuit("bjt_mirror", "current_mirror")
def _():
  return [npn("Q1", "IIN1", "IIN1", "VSS"), npn("Q2", "IOUT1", "IIN1", "VSS")]


@circuit("ota_5t_nmos", "ota")
def _():
  return [nm("M1", "m", "VIN1", "t"), nm("M2", "VOUT1", "VIN2", "t"),
          pm("M3", "m", "m", "VDD"), pm("M4", "VOUT1", "m", "VDD"),
          nm("M5", "t", "VB1", "VSS")]


@circuit("ota_5t_pmos", "ota")
def _():
  return [pm("M1", "m", "VIN1", "t"), pm("M2", "VOUT1", "VIN2", "t"),
          nm("M3", "m", "m", "VSS"), nm("M4", "VOUT1", "m", "VSS"),
          pm("M5", "t", "VB1", "VDD")]


@circuit("diff_pair_resistive", "amplifier")
def _():
  return [nm("M1", "VOUT1", "VIN1", "t"), nm("M2", "VOUT2", "VIN2", "t"),
          two("R1", "VDD", "VOUT1"), two("R2", "VDD", "VOUT2"),
          nm("M3", "t", "VB1", "VSS")]


@circuit("two_stage_miller", "ota")
def _():
  return [nm("M1", "m", "VIN1", "t"), nm("M2", "o1", "VIN2", "t"),
          pm("M3", "m", "m", "VDD"), pm("M4", "o1", "m", "VDD"),
          nm("M5", "t", "b", "VSS"), nm("M6", "b", "b", "VSS"),
          pm("M7", "VOUT1", "o1", "VDD"), nm("M8", "VOUT1", "b", "VSS"),
          two("C1", "o1", "z"), two("R1", "z", "VOUT1"),
          two("R2", "VDD", "b")]


@circuit("telescopic_ota", "ota")
def _():
  return [nm("M1", "a", "VIN1", "t"), nm("M2", "b", "VIN2", "t"),
          nm("M3", "m", "VB2", "a"), nm("M4", "VOUT1", "VB2", "b"),
          pm("M5", "m", "VB3", "c"), pm("M6", "VOUT1", "VB3", "d"),
          pm("M7", "c", "m", "VDD"), pm("M8", "d", "m", "VDD"),
          nm("M9", "t", "VB1", "VSS")]


@circuit("folded_cascode_ota", "ota")
def _():
  return [pm("M1", "a", "VIN1", "t"), pm("M2", "b", "VIN2", "t"),
          pm("M3", "t", "VB1", "VDD"),
          nm("M4", "a", "VB4", "VSS"), nm("M5", "b", "VB4", "VSS"),
          nm("M6", "m", "VB3", "a"), nm("M7", "VOUT1", "VB3", "b"),
          pm("M8", "m", "VB2", "c"), pm("M9", "VOUT1", "VB2", "d"),
          pm("M10", "c", "m", "VDD"), pm("M11", "d", "m", "VDD")]


@circuit("ldo", "regulator")
def _():
  return diff_pair_5t("", "VB1", "fb", "g", "VB2") + [
      pm("M6", "VOUT1", "g", "VDD"), two("R1", "VOUT1", "fb"),
      two("R2", "fb", "VSS"), two("C1", "VOUT1", "VSS")]


@circuit("ldo_compensated", "regulator")
def _():
  return diff_pair_5t("", "VB1", "fb", "g", "VB2") + [
      pm("M6", "VOUT1", "g", "VDD"), two("R1", "VOUT1", "fb"),
      two("R2", "fb", "VSS"), two("C1", "VOUT1", "VSS"),
      two("C2", "g", "z"), two("R3", "z", "VOUT1")]


@circuit("bandgap_pnp", "reference")
def _():
  return [pnp("Q1", "VSS", "VSS", "a"), pnp("Q2", "VSS", "VSS", "e"),
          two("R1", "b", "e"), two("R2", "VOUT1", "a"),
          two("R3", "VOUT1", "b")] + diff_pair_5t("", "a", "b", "g", "VB1") + [
              pm("M6", "VOUT1", "g", "VDD")]


@circuit("bandgap_current_mode", "reference")
def _():
  return [pnp("Q1", "VSS", "VSS", "a"), pnp("Q2", "VSS", "VSS", "e"),
          two("R1", "b", "e"), two("R2", "a", "VSS"), two("R3", "b", "VSS"),
          pm("M6", "a", "g", "VDD"), pm("M7", "b", "g", "VDD"),
          pm("M8", "VOUT1", "g", "VDD"), two("R4", "VOUT1", "VSS")] + \
      diff_pair_5t("", "a", "b", "g", "VB1")


@circuit("bandgap_npn", "reference")
def _():
  return [npn("Q1", "a", "a", "VSS"), npn("Q2", "b", "a", "e"),
          two("R1", "e", "VSS"), pm("M1", "a", "g", "VDD"),
          pm("M2", "b", "g", "VDD"), pm("M3", "g", "g", "VDD"),
          nm("M4", "g", "b", "VSS"), pm("M5", "VOUT1", "g", "VDD"),
          two("R2", "VOUT1", "c"), npn("Q3", "c", "c", "VSS")]


@circuit("beta_multiplier", "reference")
def _():
  return [nm("M1", "a", "a", "VSS"), nm("M2", "b", "a", "s"),
          two("R1", "s", "VSS"), pm("M3", "a", "b", "VDD"),
          pm("M4", "b", "b", "VDD"), pm("M5", "IOUT1", "b", "VDD")]


@circuit("strongarm_comparator", "comparator")
def _():
  return [nm("M1", "p", "VIN1", "t"), nm("M2", "q", "VIN2", "t"),
          nm("M3", "t", "LOGICQ1", "VSS"),
          nm("M4", "VOUT1", "VOUT2", "p"), nm("M5", "VOUT2", "VOUT1", "q"),
          pm("M6", "VOUT1", "VOUT2", "VDD"), pm("M7", "VOUT2", "VOUT1", "VDD"),
          pm("M8", "VOUT1", "clk", "VDD"), pm("M9", "VOUT2", "clk", "VDD"),
          pm("M10", "p", "clk", "VDD"), pm("M11", "q", "clk", "VDD"),
          inv("XINV1", "LOGICQB1", "clk")]


@circuit("latched_comparator", "comparator")
def _():
  return diff_pair_5t("", "VIN1", "VIN2", "o", "VB1") + [
      inv("XINV1", "o", "x"), inv("XINV2", "x", "VOUT1")]


@circuit("schmitt_trigger", "comparator")
def _():
  return [pm("M1", "a", "VIN1", "VDD"), pm("M2", "VOUT1", "VIN1", "a"),
          nm("M3", "VOUT1", "VIN1", "b"), nm("M4", "b", "VIN1", "VSS"),
          pm("M5", "a", "VOUT1", "VSS", "VDD"),
          nm("M6", "b", "VOUT1", "VDD", "VSS")]


def ring(n):
  nodes = ["VOUT1"] + [f"n{i}" for i in range(1, n)]
  return [inv(f"XINV{i + 1}", nodes[i], nodes[(i + 1) % n]) for i in range(n)]


for _n in (3, 5, 7, 9):
  circuit(f"ring_oscillator_{_n}", "oscillator")(lambda n=_n: ring(n))


@circuit("current_starved_ring", "oscillator")
def _():
  cards = []
  nodes = ["VOUT1", "a", "b"]
  for i in range(3):
    k = 4 * i
    inp, out = nodes[i], nodes[(i + 1) % 3]
    cards += [pm(f"M{k + 1}", f"p{i}", "g", "VDD"),
              pm(f"M{k + 2}", out, inp, f"p{i}"),
              nm(f"M{k + 3}", out, inp, f"s{i}"),
              nm(f"M{k + 4}", f"s{i}", "VB1", "VSS")]
  cards += [pm("M13", "g", "g", "VDD"), nm("M14", "g", "VB1", "VSS")]
  return cards


@circuit("lc_vco_nmos", "oscillator")
def _():
  return [nm("M1", "VOUT1", "VOUT2", "t"), nm("M2", "VOUT2", "VOUT1", "t"),
          nm("M3", "t", "VB1", "VSS"), two("L1", "VDD", "VOUT1"),
          two("L2", "VDD", "VOUT2"), two("C1", "VOUT1", "VIN1"),
          two("C2", "VOUT2", "VIN1")]


@circuit("lc_vco_complementary", "oscillator")
def _():
  return [nm("M1", "VOUT1", "VOUT2", "VSS"), nm("M2", "VOUT2", "VOUT1", "VSS"),
          pm("M3", "VOUT1", "VOUT2", "t"), pm("M4", "VOUT2", "VOUT1", "t"),
          pm("M5", "t", "VB1", "VDD"), two("L1", "VOUT1", "VOUT2"),
          two("C1", "VOUT1", "VSS"), two("C2", "VOUT2", "VSS")]


@circuit("colpitts_bjt", "oscillator")
def _():
  return [npn("Q1", "c", "VB1", "e"), two("L1", "VDD", "c"),
          two("C1", "c", "e"), two("C2", "e", "VSS"),
          two("R1", "e", "VSS"), two("C3", "c", "VOUT1"),
          two("R2", "VOUT1", "VSS")]


@circuit("lna_inductive", "lna")
def _():
  return [two("L1", "VIN1", "g"), nm("M1", "d", "g", "s"),
          two("L2", "s", "VSS"), nm("M2", "o", "VB1", "d"),
          two("L3", "VDD", "o"), two("C1", "o", "VOUT1"),
          two("R1", "VB2", "g")]


@circuit("lna_common_gate", "lna")
def _():
  return [nm("M1", "o", "VB1", "VIN1"), two("L1", "VIN1", "VSS"),
          two("L2", "VDD", "o"), two("C1", "o", "VOUT1"),
          two("R1", "VOUT1", "VSS")]


@circuit("gilbert_mixer", "mixer")
def _():
  return [nm("M1", "a", "VIN1", "t"), nm("M2", "b", "VIN2", "t"),
          nm("M3", "VOUT1", "LOGICQ1", "a"), nm("M4", "VOUT2", "LOGICQB1", "a"),
          nm("M5", "VOUT2", "LOGICQ1", "b"), nm("M6", "VOUT1", "LOGICQB1", "b"),
          nm("M7", "t", "VB1", "VSS"), two("R1", "VDD", "VOUT1"),
          two("R2", "VDD", "VOUT2")]


@circuit("single_balanced_mixer", "mixer")
def _():
  return [nm("M1", "a", "VIN1", "VSS"), nm("M2", "VOUT1", "LOGICQ1", "a"),
          nm("M3", "VOUT2", "LOGICQB1", "a"), two("R1", "VDD", "VOUT1"),
          two("R2", "VDD", "VOUT2")]


@circuit("passive_mixer", "mixer")
def _():
  return [tg("XTG1", "VIN1", "VOUT1", "LOGICQ1"),
          tg("XTG2", "VIN1", "VOUT2", "LOGICQB1"),
          two("C1", "VOUT1", "VSS"), two("C2", "VOUT2", "VSS")]


@circuit("tg_sampler", "sample_hold")
def _():
  return [tg("XTG1", "VIN1", "h", "LOGICQ1"), two("C1", "h", "VSS"),
          nm("M1", "VDD", "h", "VOUT1"), nm("M2", "VOUT1", "VB1", "VSS")]


@circuit("sample_hold_opamp", "sample_hold")
def _():
  return [tg("XTG1", "VIN1", "h", "LOGICQ1"), two("C1", "h", "VSS")] + \
      diff_pair_5t("", "h", "VOUT1", "VOUT1", "VB1")


@circuit("tg_mux", "switch")
def _():
  return [tg("XTG1", "VIN1", "VOUT1", "LOGICQ1"),
          tg("XTG2", "VIN2", "VOUT1", "s"), inv("XINV1", "LOGICQ1", "s")]


@circuit("buck_converter", "power")
def _():
  return [inv("XINV1", "LOGICQ1", "g"), pm("M1", "x", "g", "VDD"),
          two("D1", "VSS", "x"), two("L1", "x", "VOUT1"),
          two("C1", "VOUT1", "VSS"), two("R1", "VOUT1", "VSS")]


@circuit("buck_synchronous", "power")
def _():
  return [inv("XINV1", "LOGICQ1", "g"), pm("M1", "x", "g", "VDD"),
          nm("M2", "x", "g", "VSS"), two("L1", "x", "VOUT1"),
          two("C1", "VOUT1", "VSS"), two("R1", "VOUT1", "VSS")]


@circuit("boost_converter", "power")
def _():
  return [two("L1", "VDD", "x"), nm("M1", "x", "LOGICQ1", "VSS"),
          two("D1", "x", "VOUT1"), two("C1", "VOUT1", "VSS"),
          two("R1", "VOUT1", "VSS")]


@circuit("charge_pump", "power")
def _():
  return [pm("M1", "VOUT1", "LOGICQB1", "VDD"),
          nm("M2", "VOUT1", "LOGICQ2", "VSS"), two("C1", "VOUT1", "VSS"),
          two("R1", "VOUT1", "z"), two("C2", "z", "VSS")]


@circuit("voltage_doubler", "power")
def _():
  return [two("D1", "VDD", "a"), two("C1", "VIN1", "a"),
          two("D2", "a", "VOUT1"), two("C2", "VOUT1", "VSS")]


@circuit("bridge_rectifier", "power")
def _():
  return [two("D1", "VIN1", "VOUT1"), two("D2", "VIN2", "VOUT1"),
          two("D3", "VSS", "VIN1"), two("D4", "VSS", "VIN2"),
          two("C1", "VOUT1", "VSS")]


@circuit("peak_detector", "power")
def _():
  return [two("D1", "VIN1", "VOUT1"), two("C1", "VOUT1", "VSS"),
          two("R1", "VOUT1", "VSS")]


@circuit("xor_phase_detector", "phase_detector")
def _():
  return [xor("XXOR1", "VIN1", "VIN2", "y"), two("R1", "y", "VOUT1"),
          two("C1", "VOUT1", "VSS")]


@circuit("xor_frequency_doubler", "phase_detector")
def _():
  return [two("R1", "VIN1", "d"), two("C1", "d", "VSS"),
          xor("XXOR1", "VIN1", "d", "VOUT1")]


@circuit("xor_pll_loop", "phase_detector")
def _():
  return [xor("XXOR1", "VIN1", "fb", "y"), two("R1", "y", "c"),
          two("C1", "c", "VSS"),
          pm("M1", "p", "c", "VDD"), nm("M2", "p", "c", "VSS"),
          inv("XINV1", "p", "q"), inv("XINV2", "q", "fb"),
          inv("XINV3", "fb", "VOUT1"), two("C2", "p", "VSS")]


@circuit("bjt_diff_amp", "amplifier")
def _():
  return [npn("Q1", "VOUT1", "VIN1", "e"), npn("Q2", "VOUT2", "VIN2", "e"),
          npn("Q3", "e", "VB1", "VSS"), two("R1", "VDD", "VOUT1"),
          two("R2", "VDD", "VOUT2")]


@circuit("bjt_common_emitter", "amplifier")
def _():
  return [npn("Q1", "VOUT1", "VIN1", "e"), two("R1", "VDD", "VOUT1"),
          two("R2", "e", "VSS"), two("C1", "e", "VSS")]


@circuit("bjt_emitter_follower", "amplifier")
def _():
  return [npn("Q1", "VDD", "VIN1", "VOUT1"), two("R1", "VOUT1", "VSS")]


@circuit("darlington", "amplifier")
def _():
  return [npn("Q1", "VDD", "VIN1", "b"), npn("Q2", "VDD", "b", "VOUT1"),
          two("R1", "VOUT1", "VSS")]


@circuit("class_ab_output", "amplifier")
def _():
  return [npn("Q1", "VDD", "a", "VOUT1"), pnp("Q2", "VSS", "b", "VOUT1"),
          two("D1", "a", "m"), two("D2", "m", "b"),
          two("R1", "VDD", "a"), nm("M1", "b", "VIN1", "VSS")]


@circuit("rc_lowpass", "filter")
def _():
  return [two("R1", "VIN1", "VOUT1"), two("C1", "VOUT1", "VSS")]


@circuit("rlc_bandpass", "filter")
def _():
  return [two("C1", "VIN1", "a"), two("L1", "a", "VOUT1"),
          two("R1", "VOUT1", "VSS")]


@circuit("sallen_key", "filter")
def _():
  return [two("R1", "VIN1", "a"), two("R2", "a", "b"),
          two("C1", "a", "VOUT1"), two("C2", "b", "VSS")] + \
      diff_pair_5t("", "b", "VOUT1", "VOUT1", "VB1")


@circuit("gm_c_integrator", "filter")
def _():
  return diff_pair_5t("", "VIN1", "VIN2", "VOUT1", "VB1") + [
      two("C1", "VOUT1", "VSS")]


@circuit("cross_coupled_latch", "latch")
def _():
  return [nm("M1", "VOUT1", "VOUT2", "VSS"), nm("M2", "VOUT2", "VOUT1", "VSS"),
          pm("M3", "VOUT1", "VOUT2", "VDD"), pm("M4", "VOUT2", "VOUT1", "VDD"),
          nm("M5", "VOUT1", "LOGICQ1", "VIN1"),
          nm("M6", "VOUT2", "LOGICQ1", "VIN2")]


@circuit("inverter_chain", "buffer")
def _():
  return [inv("XINV1", "VIN1", "a"), inv("XINV2", "a", "b"),
          inv("XINV3", "b", "c"), inv("XINV4", "c", "VOUT1")]


@circuit("cmos_inverter", "buffer")
def _():
  return [pm("M1", "VOUT1", "VIN1", "VDD"), nm("M2", "VOUT1", "VIN1", "VSS")]


@circuit("fully_diff_folded_cascode_cmfb", "ota")
def _():
  return [
      pm("M1", "a", "VIN1", "t"), pm("M2", "b", "VIN2", "t"),
      pm("M3", "t", "VB1", "VDD"),
      nm("M4", "a", "cm", "VSS"), nm("M5", "b", "cm", "VSS"),
      nm("M6", "VOUT2", "VB3", "a"), nm("M7", "VOUT1", "VB3", "b"),
      pm("M8", "VOUT2", "VB2", "c"), pm("M9", "VOUT1", "VB2", "d"),
      pm("M10", "c", "VB1", "VDD"), pm("M11", "d", "VB1", "VDD"),
      two("R1", "VOUT1", "s"), two("R2", "s", "VOUT2"),
      two("C1", "VOUT1", "VSS"), two("C2", "VOUT2", "VSS"),
      nm("M12", "u", "s", "w"), nm("M13", "cm", "VB4", "w"),
      nm("M14", "w", "VB5", "VSS"), pm("M15", "u", "u", "VDD"),
      pm("M16", "cm", "u", "VDD"), nm("M17", "cm", "cm", "VSS"),
      two("C3", "VOUT1", "s"), two("C4", "s", "VOUT2"),
  ]


@circuit("sar_frontend", "data_converter")
def _():
  cards = [tg("XTG1", "VIN1", "top", "LOGICQ1"),
           tg("XTG2", "VB1", "top", "LOGICQB1")]
  for i in range(1, 5):
    cards += [two(f"C{i}", "top", f"bot{i}"),
              tg(f"XTG{i + 2}", f"bot{i}", "VB2", f"ctl{i}"),
              inv(f"XINV{i}", "LOGICQ2", f"ctl{i}")]
  cards += [two("C5", "top", "VSS")]
  cards += diff_pair_5t("", "top", "VB3", "o", "VB4")
  cards += [inv("XINV5", "o", "VOUT1")]
  return cards


@circuit("two_stage_with_bias", "ota")
def _():
  return [
      nm("M1", "m", "VIN1", "t"), nm("M2", "o1", "VIN2", "t"),
      pm("M3", "m", "m", "c"), pm("M4", "o1", "m", "d"),
      pm("M5", "c", "k", "VDD"), pm("M6", "d", "k", "VDD"),
      nm("M7", "t", "b", "VSS"), pm("M8", "VOUT1", "o1", "VDD"),
      nm("M9", "VOUT1", "b", "VSS"), two("C1", "o1", "z"),
      two("R1", "z", "VOUT1"),
      nm("M10", "b", "b", "VSS"), nm("M11", "k", "b", "VSS"),
      pm("M12", "k", "k", "VDD"), pm("M13", "b", "k", "r"),
      two("R2", "VDD", "r"), two("C2", "VOUT1", "VSS"),
      nm("M14", "VOUT2", "VOUT1", "VSS"), pm("M15", "VOUT2", "VOUT1", "VDD"),
      inv("XINV1", "VOUT2", "VOUT3"),
  ]


def emit(name, label, cards):
  lines = [f".title {label}", f"* {name}"]
  for card in cards:
    lines.append(" ".join(card))
  lines.append(".end")
  return "\n".join(lines) + "\n"


def main():
  parser = argparse.ArgumentParser(description=__doc__)
  parser.add_argument("out", type=pathlib.Path)
  args = parser.parse_args()
  args.out.mkdir(parents=True, exist_ok=True)
  for name, (label, cards) in sorted(CIRCUITS.items()):
    edges = check(name, cards)
    (args.out / f"{name}.ckt").write_text(emit(name, label, cards))
    print(f"{name}: {len(cards)} devices, {edges} edges")
  print(f"{len(CIRCUITS)} circuits")


if __name__ == "__main__":
  main()

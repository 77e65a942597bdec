"""Bundled worked instances and a full-pipeline report for each."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

import numpy as np

from .anf import cut_decompose
from .certificate import search_and_verify, verify_certificate
from .documents import Instance, parse_instance
from .f2 import bilinear_slice, is_purely_bilinear, rank_f2
from .oracle import build_sign_matrix, real_rank_exact

RANK_DROP_R = np.array(
    [
        [1, 1, 1, 1],
        [1, -1, 1, -1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
    ],
    dtype=np.int8,
)

# reference values; certificate bounds come from search with r_max = |A|
EXPECTED = {
    "example1": {"gamma_rank": 2, "purely_bilinear": True, "schmidt_rank": 4},
    "example2": {"gamma_rank": 0, "purely_bilinear": False, "schmidt_rank": 2},
    "example3": {"gamma_rank": 0, "purely_bilinear": False, "schmidt_rank": 8, "certificate_bound": 8},
    "appendixB": {"gamma_rank": 2, "purely_bilinear": False, "schmidt_rank": 3, "sign_matrix": RANK_DROP_R},
}

DEMO_NAMES = tuple(EXPECTED)


def instance_text(name: str) -> str:
    if name not in EXPECTED:
        raise KeyError(f"unknown demo {name!r}; choose from {', '.join(DEMO_NAMES)}")
    return resources.files("hypercert").joinpath("instances", f"{name}.yaml").read_text(encoding="utf-8")


def load_demo(name: str) -> Instance:
    return parse_instance(instance_text(name))


@dataclass
class DemoReport:
    name: str
    lines: list[str]
    ok: bool

    def __str__(self) -> str:
        return "\n".join(self.lines)


def _fmt_poly(f) -> str:
    if f.is_zero():
        return "0"
    return " + ".join("".join(f"x{v + 1}" for v in s) or "1" for s in f.supports())


def _fmt_matrix(rows) -> list[str]:
    return ["    " + " ".join(f"{x:>2}" for x in row) for row in rows]


def run_demo(name: str) -> DemoReport:
    inst = load_demo(name)
    g, cut = inst.graph, inst.cut
    expected = EXPECTED[name]
    _, _, f_ab = cut_decompose(g.phase_polynomial(), cut)
    gamma = bilinear_slice(f_ab, cut)
    sign = build_sign_matrix(f_ab, cut)
    computed = {
        "gamma_rank": rank_f2(gamma),
        "purely_bilinear": is_purely_bilinear(f_ab),
        "schmidt_rank": real_rank_exact(sign),
    }
    cert = search_and_verify(g, cut, r_max=max(1, len(cut.a_vertices)))
    computed["certificate_bound"] = cert.bound if cert else None

    lines = [f"demo {name}", f"  A = {[v + 1 for v in cut.a_vertices]}, B = {[v + 1 for v in cut.b_vertices]}"]
    lines.append(f"  cross phase: {_fmt_poly(f_ab)}")
    lines.append("  Gamma_AB:")
    lines += _fmt_matrix(gamma.to_rows()) if gamma.rows else ["    (empty)"]
    if "sign_matrix" in expected:
        lines.append("  sign matrix R:")
        lines += _fmt_matrix(sign.entries.tolist())
    ok = True
    for key in ("gamma_rank", "purely_bilinear", "schmidt_rank", "certificate_bound"):
        got = computed[key]
        if key in expected:
            match = got == expected[key]
            ok &= match
            lines.append(f"  {key}: {got}  (expected {expected[key]}) {'ok' if match else 'MISMATCH'}")
        else:
            lines.append(f"  {key}: {got}")
    if "sign_matrix" in expected:
        match = np.array_equal(sign.entries, expected["sign_matrix"])
        ok &= match
        lines.append(f"  sign matrix matches reference: {'ok' if match else 'MISMATCH'}")
    if cert is not None:
        I = [v + 1 for v in cert.restriction.active_a]
        J = [v + 1 for v in cert.restriction.active_b]
        verified = verify_certificate(g, cut, cert)
        ok &= verified and cert.bound <= computed["schmidt_rank"]
        lines.append(f"  certificate: I={I} J={J} t={cert.t} bound={cert.bound} verified={verified}")
    lines.append(f"  result: {'PASS' if ok else 'FAIL'}")
    return DemoReport(name, lines, ok)

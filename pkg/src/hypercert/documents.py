"""Instance and certificate documents.

Files use 1-based vertex labels; everything in memory is 0-based.  Instances
are YAML (JSON is accepted too, being a subset); validation errors carry the
line of the offending node.  Certificates are canonical JSON.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from typing import Any

import yaml

from . import __version__
from .certificate import CoreCertificate, Restriction
from .f2 import F2Matrix
from .hypergraph import Cut, Hypergraph

CERT_FORMAT = "hypercert/certificate-v1"

_SCALAR_LIST = re.compile(r"\[\s+([^\[\]{}\"]*?)\s+\]")


class DocumentError(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    graph: Hypergraph
    cut: Cut

    def to_document(self) -> dict[str, Any]:
        return {
            "n": self.graph.n,
            "edges": [sorted(v + 1 for v in e) for e in self.graph.edges],
            "cut": {
                "a": [v + 1 for v in self.cut.a_vertices],
                "b": [v + 1 for v in self.cut.b_vertices],
            },
        }

    def digest(self) -> str:
        return "sha256:" + hashlib.sha256(canonical_json(self.to_document()).encode()).hexdigest()

    def dumps(self) -> str:
        doc = self.to_document()
        lines = [f"n: {doc['n']}"]
        if doc["edges"]:
            lines += ["edges:"] + [f"  - {e}" for e in doc["edges"]]
        else:
            lines.append("edges: []")
        lines += ["cut:", f"  a: {doc['cut']['a']}", f"  b: {doc['cut']['b']}"]
        return "\n".join(lines) + "\n"


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _line(node: yaml.Node) -> int:
    return node.start_mark.line + 1


def _fail(node: yaml.Node, msg: str):
    raise DocumentError(f"line {_line(node)}: {msg}")


def _int(node: yaml.Node, what: str) -> int:
    if not isinstance(node, yaml.ScalarNode) or node.tag != "tag:yaml.org,2002:int":
        _fail(node, f"{what} must be an integer")
    return int(yaml.safe_load(node.value))


def _int_list(node: yaml.Node, what: str) -> list[int]:
    if not isinstance(node, yaml.SequenceNode):
        _fail(node, f"{what} must be a list of integers")
    return [_int(item, f"entry of {what}") for item in node.value]


def _mapping(node: yaml.Node, what: str, required: tuple[str, ...]) -> dict[str, yaml.Node]:
    if not isinstance(node, yaml.MappingNode):
        _fail(node, f"{what} must be a mapping")
    out: dict[str, yaml.Node] = {}
    for key, value in node.value:
        if key.value in out:
            _fail(key, f"duplicate key {key.value!r} in {what}")
        if key.value not in required:
            _fail(key, f"unknown key {key.value!r} in {what}")
        out[key.value] = value
    for name in required:
        if name not in out:
            _fail(node, f"{what} is missing {name!r}")
    return out


def parse_instance(text: str) -> Instance:
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}: " if mark is not None else ""
        raise DocumentError(f"{where}not a valid YAML/JSON document ({getattr(exc, 'problem', exc)})") from None
    if root is None:
        raise DocumentError("line 1: empty instance document")
    top = _mapping(root, "instance", ("n", "edges", "cut"))
    n = _int(top["n"], "n")
    if not 1 <= n <= 64:
        _fail(top["n"], f"n must be in 1..64, got {n}")

    edges_node = top["edges"]
    if not isinstance(edges_node, yaml.SequenceNode):
        _fail(edges_node, "edges must be a list of vertex lists")
    edges = []
    for edge_node in edges_node.value:
        labels = _int_list(edge_node, "edge")
        for v in labels:
            if not 1 <= v <= n:
                _fail(edge_node, f"edge {labels} has vertex {v} outside 1..{n}")
        if len(set(labels)) != len(labels):
            _fail(edge_node, f"edge {labels} repeats a vertex")
        edges.append([v - 1 for v in labels])

    cut_node = top["cut"]
    cut_map = _mapping(cut_node, "cut", ("a", "b"))
    a = _int_list(cut_map["a"], "cut.a")
    b = _int_list(cut_map["b"], "cut.b")
    for side, labels in (("a", a), ("b", b)):
        if not labels:
            _fail(cut_map[side], f"cut.{side} must be nonempty")
    overlap = sorted(set(a) & set(b))
    if overlap:
        _fail(cut_node, f"cut sides overlap at {overlap}")
    if len(set(a)) != len(a) or len(set(b)) != len(b):
        _fail(cut_node, "cut side repeats a vertex")
    if sorted(a + b) != list(range(1, n + 1)):
        _fail(cut_node, f"cut must cover vertices 1..{n} exactly")
    return Instance(Hypergraph(n, edges), Cut([v - 1 for v in a], [v - 1 for v in b]))


def load_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        try:
            return parse_instance(fh.read())
        except DocumentError as exc:
            raise DocumentError(f"{path}: {exc}") from None


# -- certificates -------------------------------------------------------------


@dataclass(frozen=True)
class CertificateDocument:
    instance_hash: str
    certificate: CoreCertificate
    reversed_cut: bool = False
    tool_version: str = __version__

    def to_dict(self) -> dict[str, Any]:
        c = self.certificate
        r = c.restriction
        return {
            "format": CERT_FORMAT,
            "tool_version": self.tool_version,
            "instance_hash": self.instance_hash,
            "orientation": "B|A" if self.reversed_cut else "A|B",
            "restriction": {
                "I": [v + 1 for v in r.active_a],
                "J": [v + 1 for v in r.active_b],
                "beta": [[v + 1, b] for v, b in sorted(r.beta.items())],
                "alpha": [[v + 1, b] for v, b in sorted(r.alpha.items())],
            },
            "gamma_core": c.gamma_core.to_rows(),
            "t": c.t,
            "bound": c.bound,
            "rectangular": c.rectangular,
        }

    def dumps(self) -> str:
        text = json.dumps(self.to_dict(), indent=2, sort_keys=True)
        # keep innermost scalar lists (bit rows, label lists) on one line
        text = _SCALAR_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
        return text + "\n"


def _pairs(raw: Any, what: str) -> dict[int, int]:
    if not isinstance(raw, list):
        raise DocumentError(f"{what} must be a list of [vertex, bit] pairs")
    out: dict[int, int] = {}
    for item in raw:
        if not (isinstance(item, list) and len(item) == 2 and all(type(x) is int for x in item)):
            raise DocumentError(f"{what} entry {item!r} is not a [vertex, bit] pair")
        v, b = item
        if v - 1 in out:
            raise DocumentError(f"{what} fixes vertex {v} twice")
        out[v - 1] = b
    return out


def _labels(raw: Any, what: str) -> tuple[int, ...]:
    if not isinstance(raw, list) or not all(type(x) is int for x in raw):
        raise DocumentError(f"{what} must be a list of integers")
    return tuple(v - 1 for v in raw)


def parse_certificate(text: str) -> CertificateDocument:
    """Structural parse only; semantic checks belong to the verifier."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}: certificate is not valid JSON ({exc.msg})") from None
    if not isinstance(raw, dict):
        raise DocumentError("certificate must be a JSON object")
    if raw.get("format") != CERT_FORMAT:
        raise DocumentError(f"unsupported certificate format {raw.get('format')!r}")
    for key in ("instance_hash", "restriction", "gamma_core", "t", "bound"):
        if key not in raw:
            raise DocumentError(f"certificate is missing {key!r}")
    res = raw["restriction"]
    if not isinstance(res, dict) or not {"I", "J", "beta", "alpha"} <= set(res):
        raise DocumentError("restriction needs I, J, beta and alpha")
    restriction = Restriction(
        _labels(res["I"], "restriction.I"),
        _labels(res["J"], "restriction.J"),
        _pairs(res["beta"], "restriction.beta"),
        _pairs(res["alpha"], "restriction.alpha"),
    )
    rows = raw["gamma_core"]
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise DocumentError("gamma_core must be a list of bit rows")
    cols = len(rows[0]) if rows else len(restriction.active_b)
    try:
        gamma = F2Matrix.from_rows(rows, cols)
    except ValueError as exc:
        raise DocumentError(f"gamma_core: {exc}") from None
    t, bound = raw["t"], raw["bound"]
    if type(t) is not int or type(bound) is not int:
        raise DocumentError("t and bound must be integers")
    orientation = raw.get("orientation", "A|B")
    if orientation not in ("A|B", "B|A"):
        raise DocumentError(f"orientation must be 'A|B' or 'B|A', got {orientation!r}")
    return CertificateDocument(
        instance_hash=str(raw["instance_hash"]),
        certificate=CoreCertificate(restriction, gamma, t, bound),
        reversed_cut=orientation == "B|A",
        tool_version=str(raw.get("tool_version", "")),
    )

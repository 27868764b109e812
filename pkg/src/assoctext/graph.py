"""Chain-association graphs over tokens.

A graph is grown by breadth-first expansion from one or more root words,
applying every enabled association rule that is legal for a node's kind.
Graphs are immutable once built; adjacency is treated as undirected for
walks and distances so that chains can be both deepened and retracted.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import lexicon
from .errors import (CoverageError, NodeNotFoundError, ResourceFormatError,
                     UnreachableError)
from .lexicon import ResourceBundle, Token

RULES = ("translation", "pinyin", "transliteration", "acronym",
         "fuzzy", "hanzify", "visual", "disassemble")

#: legal (source kinds, target kinds) per rule
RULE_SIGNATURES = {
    "translation": (("hanzi_word",), ("latin_word",)),
    "pinyin": (("hanzi_word",), ("pinyin_seq",)),
    "transliteration": (("latin_word",), ("hanzi_word",)),
    "acronym": (("pinyin_seq", "latin_word"), ("acronym",)),
    "fuzzy": (("acronym",), ("pinyin_seq",)),
    "hanzify": (("pinyin_seq",), ("hanzi_word",)),
    "visual": (("hanzi_word",), ("hanzi_word",)),
    "disassemble": (("hanzi_word",), ("hanzi_word", "component_seq")),
}

DEFAULT_FANOUT = {
    "translation": 3,
    "pinyin": 1,
    "transliteration": 3,
    "acronym": 1,
    "fuzzy": 10,
    "hanzify": 5,
    "visual": 3,
    "disassemble": 1,
}


@dataclass(frozen=True)
class ExpansionConfig:
    max_depth: int = 3
    fanout: Mapping[str, int] = field(default_factory=lambda: dict(DEFAULT_FANOUT))
    enabled_rules: frozenset = frozenset(RULES)

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        unknown = set(self.enabled_rules) - set(RULES)
        if unknown:
            raise ValueError(f"unknown rules {sorted(unknown)}")
        for rule in self.enabled_rules:
            if self.fanout.get(rule, 0) < 1:
                raise ValueError(f"fanout for enabled rule {rule!r} must be >= 1")

    def cap(self, rule: str) -> int:
        return self.fanout.get(rule, 0)


@dataclass(frozen=True)
class AssocNode:
    id: int
    token: Token
    depth: int


@dataclass(frozen=True)
class AssocEdge:
    src: int
    dst: int
    rule: str


NodeRef = Union[int, Token, AssocNode]


class AssocGraph:
    """Labeled association graph with deterministic node and edge order."""

    def __init__(self, nodes: Sequence[AssocNode], edges: Sequence[AssocEdge],
                 roots: Sequence[int], config: ExpansionConfig):
        self.nodes = tuple(nodes)
        self.edges = tuple(edges)
        self.roots = tuple(roots)
        self.config = config
        self._by_token = {n.token: n.id for n in self.nodes}
        adj: dict[int, list[int]] = {n.id: [] for n in self.nodes}
        rules: dict[tuple[int, int], str] = {}
        for e in self.edges:
            if e.dst not in adj[e.src]:
                adj[e.src].append(e.dst)
            rules.setdefault((e.src, e.dst), e.rule)
        for e in self.edges:
            if e.src not in adj[e.dst]:
                adj[e.dst].append(e.src)
        self._adj = adj
        self._edge_rule = rules

    # -- basics ------------------------------------------------------------

    def __len__(self):
        return len(self.nodes)

    def __eq__(self, other):
        if not isinstance(other, AssocGraph):
            return NotImplemented
        return (self.nodes == other.nodes and self.edges == other.edges
                and self.roots == other.roots and self.config == other.config)

    def __contains__(self, ref) -> bool:
        try:
            self.resolve(ref)
            return True
        except NodeNotFoundError:
            return False

    def resolve(self, ref: NodeRef) -> AssocNode:
        if isinstance(ref, AssocNode):
            ref = ref.id
        if isinstance(ref, Token):
            if ref not in self._by_token:
                raise NodeNotFoundError(f"token {ref.surface!r} not in graph")
            return self.nodes[self._by_token[ref]]
        if isinstance(ref, int) and 0 <= ref < len(self.nodes):
            return self.nodes[ref]
        raise NodeNotFoundError(f"node {ref!r} not in graph")

    def root_nodes(self) -> list[AssocNode]:
        return [self.nodes[i] for i in self.roots]

    # -- queries -----------------------------------------------------------

    def neighbors(self, ref: NodeRef) -> list[AssocNode]:
        """Adjacent nodes (both edge directions), deterministic order."""
        node = self.resolve(ref)
        return [self.nodes[j] for j in self._adj[node.id]]

    def layer_distance(self, a: NodeRef, b: NodeRef) -> int:
        """Hop count between two nodes along (undirected) edges."""
        src, dst = self.resolve(a), self.resolve(b)
        if src.id == dst.id:
            return 0
        dist = {src.id: 0}
        queue = deque([src.id])
        while queue:
            u = queue.popleft()
            for v in self._adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    if v == dst.id:
                        return dist[v]
                    queue.append(v)
        raise UnreachableError(
            f"no path between {src.token.surface!r} and {dst.token.surface!r}")

    def path_rules(self, a: NodeRef, b: NodeRef) -> list[str]:
        """Rule labels along one shortest path from ``a`` to ``b``."""
        src, dst = self.resolve(a), self.resolve(b)
        if src.id == dst.id:
            return []
        parent: dict[int, int] = {src.id: -1}
        queue = deque([src.id])
        while queue and dst.id not in parent:
            u = queue.popleft()
            for v in self._adj[u]:
                if v not in parent:
                    parent[v] = u
                    queue.append(v)
        if dst.id not in parent:
            raise UnreachableError(
                f"no path between {src.token.surface!r} and {dst.token.surface!r}")
        rules = []
        cur = dst.id
        while parent[cur] != -1:
            u = cur, parent[cur]
            rule = self._edge_rule.get((u[1], u[0])) or self._edge_rule.get((u[0], u[1]))
            rules.append(rule)
            cur = parent[cur]
        rules.reverse()
        return rules

    def candidate_set(self, root: NodeRef = None) -> list[Token]:
        """Every substitute reachable from a root, excluding the root itself.

        Ordered by (depth, surface codepoints, kind).
        """
        if root is None:
            if len(self.roots) != 1:
                raise ValueError("graph has multiple roots; specify one")
            root = self.roots[0]
        node = self.resolve(root)
        if node.id not in self.roots:
            raise ValueError(f"{node.token.surface!r} is not a root")
        seen = {node.id}
        queue = deque([node.id])
        reach = []
        while queue:
            u = queue.popleft()
            for v in self._adj[u]:
                if v not in seen:
                    seen.add(v)
                    reach.append(self.nodes[v])
                    queue.append(v)
        reach.sort(key=lambda n: (n.depth, n.token.surface, n.token.kind))
        return [n.token for n in reach]

    # -- serialization -----------------------------------------------------

    def dumps(self) -> str:
        lines = [json.dumps({
            "type": "assoc-graph", "version": 1,
            "config": {
                "max_depth": self.config.max_depth,
                "fanout": {r: self.config.fanout[r]
                           for r in sorted(self.config.fanout)},
                "enabled_rules": sorted(self.config.enabled_rules),
            }}, ensure_ascii=False)]
        root_set = set(self.roots)
        for n in self.nodes:
            rec = {"id": n.id, "surface": n.token.surface,
                   "kind": n.token.kind, "depth": n.depth}
            if n.id in root_set:
                rec["root"] = True
            lines.append(json.dumps(rec, ensure_ascii=False))
        for e in self.edges:
            lines.append(json.dumps({"from": e.src, "to": e.dst, "rule": e.rule},
                                    ensure_ascii=False))
        return "\n".join(lines) + "\n"

    @staticmethod
    def loads(data: Union[str, bytes]) -> "AssocGraph":
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        lines = [ln for ln in data.split("\n") if ln.strip()]
        if not lines:
            raise ResourceFormatError("empty graph stream", line=1)

        def parse(lineno, line):
            try:
                return json.loads(line)
            except json.JSONDecodeError as exc:
                raise ResourceFormatError(f"bad JSON: {exc}", line=lineno) from None

        header = parse(1, lines[0])
        if header.get("type") != "assoc-graph":
            raise ResourceFormatError("missing assoc-graph header", line=1)
        cfg = header.get("config", {})
        try:
            config = ExpansionConfig(
                max_depth=cfg["max_depth"],
                fanout=dict(cfg["fanout"]),
                enabled_rules=frozenset(cfg["enabled_rules"]))
        except (KeyError, TypeError) as exc:
            raise ResourceFormatError(f"bad config: {exc!r}", line=1) from None
        nodes, edges, roots = [], [], []
        for lineno, line in enumerate(lines[1:], start=2):
            rec = parse(lineno, line)
            try:
                if "surface" in rec:
                    if rec["id"] != len(nodes):
                        raise ResourceFormatError(
                            f"node ids must be dense, got {rec['id']}", line=lineno)
                    nodes.append(AssocNode(rec["id"],
                                           Token(rec["surface"], rec["kind"]),
                                           rec["depth"]))
                    if rec.get("root"):
                        roots.append(rec["id"])
                else:
                    if rec["rule"] not in RULES:
                        raise ResourceFormatError(
                            f"unknown rule {rec['rule']!r}", line=lineno)
                    if not (0 <= rec["from"] < len(nodes) and 0 <= rec["to"] < len(nodes)):
                        raise ResourceFormatError("edge endpoint out of range",
                                                  line=lineno)
                    edges.append(AssocEdge(rec["from"], rec["to"], rec["rule"]))
            except (KeyError, ValueError) as exc:
                if isinstance(exc, ResourceFormatError):
                    raise
                raise ResourceFormatError(f"bad record: {exc!r}", line=lineno) from None
        return AssocGraph(nodes, edges, roots, config)


# ---------------------------------------------------------------------------
# Expansion
# ---------------------------------------------------------------------------

def _substituted(word: str, i: int, repl: str) -> str:
    return word[:i] + repl + word[i + 1:]


def _expansions(token: Token, bundle: ResourceBundle, config: ExpansionConfig):
    """Yield (rule, target token) for every enabled rule legal for the kind.

    Lexicon coverage gaps are skipped, not raised: a word the tables cannot
    reach simply contributes no candidates for that rule.
    """
    out = []

    def emit(rule, targets):
        if rule not in config.enabled_rules:
            return
        for tgt in targets:
            src_kinds, dst_kinds = RULE_SIGNATURES[rule]
            assert token.kind in src_kinds and tgt.kind in dst_kinds
            if tgt != token:
                out.append((rule, tgt))

    surface = token.surface
    if token.kind == "hanzi_word":
        emit("translation", lexicon.translate(bundle, token)[:config.cap("translation")])
        try:
            emit("pinyin", [lexicon.pinyin_of(bundle, token)][:config.cap("pinyin")])
        except CoverageError:
            pass
        if "visual" in config.enabled_rules:
            for i, ch in enumerate(surface):
                for nb, _score in lexicon.visual_neighbors(bundle, ch,
                                                           config.cap("visual")):
                    emit("visual", [Token(_substituted(surface, i, nb), "hanzi_word")])
        if "disassemble" in config.enabled_rules:
            for i, ch in enumerate(surface):
                comp = lexicon.disassemble(bundle, ch)
                if comp is not None:
                    emit("disassemble",
                         [Token(_substituted(surface, i, comp.surface),
                                "component_seq")])
    elif token.kind == "pinyin_seq":
        emit("acronym", [lexicon.acronym(token)][:config.cap("acronym")])
        try:
            emit("hanzify", lexicon.hanzify(bundle, token, config.cap("hanzify")))
        except CoverageError:
            pass
    elif token.kind == "latin_word":
        try:
            emit("transliteration",
                 lexicon.transliterate(bundle, token, config.cap("transliteration")))
        except CoverageError:
            pass
        emit("acronym", [lexicon.acronym(token)][:config.cap("acronym")])
    elif token.kind == "acronym":
        try:
            emit("fuzzy", lexicon.fuzzy_expand(bundle, token, config.cap("fuzzy")))
        except CoverageError:
            pass
    return out


def expand_word(word: Token, bundle: ResourceBundle,
                config: Optional[ExpansionConfig] = None) -> AssocGraph:
    """Breadth-first association graph rooted at a hanzi word."""
    if config is None:
        config = ExpansionConfig()
    if not isinstance(word, Token):
        word = Token.hanzi(word)
    if word.kind != "hanzi_word":
        raise ValueError("expansion roots must be hanzi_word tokens")

    nodes = [AssocNode(0, word, 0)]
    index = {word: 0}
    edges: list[AssocEdge] = []
    edge_seen: set[tuple[int, int, str]] = set()
    queue = deque([0])
    while queue:
        nid = queue.popleft()
        node = nodes[nid]
        if node.depth >= config.max_depth:
            continue
        for rule, target in _expansions(node.token, bundle, config):
            tid = index.get(target)
            if tid is None:
                tid = len(nodes)
                nodes.append(AssocNode(tid, target, node.depth + 1))
                index[target] = tid
                queue.append(tid)
            key = (nid, tid, rule)
            if key not in edge_seen and nid != tid:
                edge_seen.add(key)
                edges.append(AssocEdge(nid, tid, rule))
    return AssocGraph(nodes, edges, [0], config)


def merge(graphs: Sequence[AssocGraph]) -> AssocGraph:
    """Union of graphs; nodes identified by (surface, kind), depth = min."""
    if not graphs:
        return AssocGraph([], [], [], ExpansionConfig())
    index: dict[Token, int] = {}
    depths: dict[int, int] = {}
    edges: list[AssocEdge] = []
    edge_seen: set[tuple[int, int, str]] = set()
    roots: list[int] = []
    for g in graphs:
        remap = {}
        for n in g.nodes:
            nid = index.get(n.token)
            if nid is None:
                nid = len(index)
                index[n.token] = nid
                depths[nid] = n.depth
            else:
                depths[nid] = min(depths[nid], n.depth)
            remap[n.id] = nid
        for e in g.edges:
            key = (remap[e.src], remap[e.dst], e.rule)
            if key not in edge_seen:
                edge_seen.add(key)
                edges.append(AssocEdge(*key))
        for r in g.roots:
            if remap[r] not in roots:
                roots.append(remap[r])
    config = graphs[0].config
    max_depth = max(g.config.max_depth for g in graphs)
    if max_depth != config.max_depth:
        config = ExpansionConfig(max_depth=max_depth, fanout=dict(config.fanout),
                                 enabled_rules=config.enabled_rules)
    nodes = [AssocNode(i, tok, depths[i]) for tok, i in index.items()]
    return AssocGraph(nodes, edges, roots, config)


def build_graph(nodes: Iterable[tuple[Token, int]],
                edges: Iterable[tuple[int, int, str]],
                roots: Iterable[int],
                config: Optional[ExpansionConfig] = None) -> AssocGraph:
    """Assemble a graph from raw pieces (mainly for tests and recovery)."""
    node_objs = [AssocNode(i, tok, depth) for i, (tok, depth) in enumerate(nodes)]
    edge_objs = [AssocEdge(s, d, r) for s, d, r in edges]
    return AssocGraph(node_objs, edge_objs, list(roots),
                      config or ExpansionConfig())

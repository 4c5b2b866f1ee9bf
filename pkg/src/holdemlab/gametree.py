"""Full game-tree materialization and exact tree computations.

Trees are flat numpy arrays (nodes, edges, information sets) so that
expected value, best response and solver sweeps are vectorized
level-by-level instead of per-node Python recursion.

For the toy variants (Kuhn, Leduc) the builder enumerates every ordered
deal -- including the unrevealed board -- at the single root chance node
and then drives the real engine for betting, so tree semantics and engine
semantics cannot drift apart.  Information sets hide whatever a seat has
not observed yet, which makes the early-chance placement game-equivalent.

Card-level four-round HUNL cannot be materialized, so HUNL trees are built
at bucket granularity: a chance model supplies the joint bucket deal, the
per-round bucket transition tensors and an expected-showdown matrix, while
betting still runs through the engine with a bet menu (see
``abstraction.AbstractChanceModel``).

``node_budget`` caps materialization; exceeding it raises
:class:`TreeBudgetError` naming the betting round being expanded.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from . import engine
from .cards import Card
from .engine import (
    ActionKind,
    ActionSpec,
    AgentView,
    Deal,
    GameSpec,
    HandState,
)

NODE_PLAYER = 0
NODE_CHANCE = 1
NODE_TERMINAL = 2

PROFILE_FORMAT = "holdemlab-profile"
PROFILE_VERSION = 1


class TreeBudgetError(RuntimeError):
    def __init__(self, round_name: str, budget: int):
        super().__init__(
            f"tree exceeds node budget {budget} while expanding round "
            f"{round_name!r}"
        )
        self.round_name = round_name
        self.budget = budget


def history_key(history: Iterable[Iterable[tuple[int, str, int]]]) -> str:
    """Public action sequence as one string, rounds joined by '/'."""
    parts = []
    for rnd in history:
        labels = []
        for _seat, kind, amount in rnd:
            if kind == ActionKind.RAISE_TO.value:
                labels.append(f"r{amount}")
            else:
                labels.append({"fold": "f", "check": "k", "call": "c"}[kind])
        parts.append("".join(labels))
    return "/".join(parts)


def toy_infoset_key(
    seat: int,
    private_cards: Sequence[Card],
    board: Sequence[Card],
    history: Iterable[Iterable[tuple[int, str, int]]],
) -> str:
    priv = "".join(c.text for c in private_cards)
    pub = "".join(c.text for c in board)
    return f"{seat}:{priv}|{pub}|{history_key(history)}"


def key_for_view(view: AgentView) -> str:
    """Info-set key for a live decision point (toy variants)."""
    return toy_infoset_key(view.seat, view.private_cards, view.board, view.history)


def bucket_infoset_key(seat: int, buckets: Sequence[int], labels: str) -> str:
    """Info-set key for bucket-abstracted HUNL trees."""
    path = ".".join(str(b) for b in buckets)
    return f"{seat}:B{path}|{labels}"


class StrategyProfile:
    """Behavior strategy: info-set key -> action labels + probabilities."""

    def __init__(self, table: dict[str, tuple[tuple[str, ...], np.ndarray]]):
        self.table = {}
        for key, (labels, probs) in table.items():
            arr = np.asarray(probs, dtype=np.float64)
            if arr.shape != (len(labels),):
                raise ValueError(f"profile row shape mismatch at {key!r}")
            if (arr < -1e-12).any() or abs(arr.sum() - 1.0) > 1e-9:
                raise ValueError(f"probabilities of {key!r} not a distribution")
            self.table[key] = (tuple(labels), np.clip(arr, 0.0, None))

    def __len__(self) -> int:
        return len(self.table)

    def __contains__(self, key: str) -> bool:
        return key in self.table

    def keys(self):
        return self.table.keys()

    def distribution(self, key: str) -> dict[str, float]:
        labels, probs = self.table[key]
        return {lab: float(p) for lab, p in zip(labels, probs)}

    def save(self, path: str, variant: str = "") -> None:
        with open(path, "w", encoding="utf-8") as fh:
            header = {
                "format": PROFILE_FORMAT,
                "version": PROFILE_VERSION,
                "variant": variant,
                "infosets": len(self.table),
            }
            fh.write(json.dumps(header) + "\n")
            for key in sorted(self.table):
                labels, probs = self.table[key]
                fh.write(
                    json.dumps(
                        {"key": key, "actions": list(labels), "probs": list(map(float, probs))}
                    )
                    + "\n"
                )

    @classmethod
    def load(cls, path: str) -> "StrategyProfile":
        with open(path, "r", encoding="utf-8") as fh:
            header = json.loads(fh.readline())
            if header.get("format") != PROFILE_FORMAT:
                raise ValueError(f"not a strategy profile: {path}")
            if header.get("version") != PROFILE_VERSION:
                raise ValueError(f"unsupported profile version {header.get('version')}")
            table = {}
            for line in fh:
                if not line.strip():
                    continue
                row = json.loads(line)
                table[row["key"]] = (tuple(row["actions"]), np.array(row["probs"]))
        return cls(table)


@dataclass
class _DepthGroup:
    edges: np.ndarray  # edge ids with parents at this depth, sorted by parent
    seg_offsets: np.ndarray  # reduceat offsets into ``edges``
    parents: np.ndarray  # unique parent node ids, aligned with segments


@dataclass
class Game:
    """Materialized extensive-form game over flat arrays."""

    spec: GameSpec
    # nodes
    kind: np.ndarray
    actor: np.ndarray
    depth: np.ndarray
    round_of_node: np.ndarray
    util0: np.ndarray
    infoset_of_node: np.ndarray
    node_edge_start: np.ndarray
    node_edge_count: np.ndarray
    node_parent_edge: np.ndarray
    # edges
    edge_parent: np.ndarray
    edge_child: np.ndarray
    edge_prob: np.ndarray
    edge_isa: np.ndarray
    edge_label: list[str]
    # infosets
    infoset_keys: list[str]
    infoset_player: np.ndarray
    infoset_actions: list[tuple[str, ...]]
    isa_offset: np.ndarray
    infoset_round: np.ndarray
    # derived (filled in __post_init__)
    by_depth: list[_DepthGroup] = field(default_factory=list)
    player_edges: list[np.ndarray] = field(default_factory=list)
    player_nodes: list[np.ndarray] = field(default_factory=list)
    infosets_at_depth: list[dict[int, np.ndarray]] = field(default_factory=list)

    def __post_init__(self) -> None:
        n_depth = int(self.depth.max()) + 1
        parent_depth = self.depth[self.edge_parent]
        self.by_depth = []
        for d in range(n_depth):
            idx = np.nonzero(parent_depth == d)[0]
            if idx.size:
                order = np.argsort(self.edge_parent[idx], kind="stable")
                idx = idx[order]
                parents, starts = np.unique(self.edge_parent[idx], return_index=True)
            else:
                parents = np.zeros(0, dtype=np.int64)
                starts = np.zeros(0, dtype=np.int64)
            self.by_depth.append(_DepthGroup(idx, starts, parents))
        self.player_edges = [
            np.nonzero(self.actor[self.edge_parent] == p)[0] for p in (0, 1)
        ]
        self.player_nodes = [np.nonzero(self.actor == p)[0] for p in (0, 1)]
        self.infosets_at_depth = [dict(), dict()]
        for p in (0, 1):
            nodes = self.player_nodes[p]
            for d in range(n_depth):
                sel = nodes[self.depth[nodes] == d]
                if sel.size:
                    self.infosets_at_depth[p][d] = np.unique(self.infoset_of_node[sel])

    # ---------------------------------------------------------------- sizes
    @property
    def n_nodes(self) -> int:
        return len(self.kind)

    @property
    def n_edges(self) -> int:
        return len(self.edge_parent)

    @property
    def n_infosets(self) -> int:
        return len(self.infoset_keys)

    @property
    def n_isa(self) -> int:
        return int(self.isa_offset[-1])

    @property
    def terminals(self) -> np.ndarray:
        return np.nonzero(self.kind == NODE_TERMINAL)[0]

    def infoset_index(self) -> dict[str, int]:
        return {k: i for i, k in enumerate(self.infoset_keys)}

    # ------------------------------------------------------------- profiles
    def uniform_sigma(self) -> np.ndarray:
        sigma = np.zeros(self.n_isa)
        counts = np.diff(self.isa_offset)
        for i, c in enumerate(counts):
            sigma[self.isa_offset[i] : self.isa_offset[i] + c] = 1.0 / c
        return sigma

    def sigma_from_profile(self, profile: StrategyProfile) -> np.ndarray:
        sigma = np.zeros(self.n_isa)
        missing = []
        for i, key in enumerate(self.infoset_keys):
            if key not in profile:
                missing.append(key)
                continue
            labels, probs = profile.table[key]
            want = self.infoset_actions[i]
            if labels != want:
                lookup = dict(zip(labels, probs))
                try:
                    probs = np.array([lookup[lab] for lab in want])
                except KeyError:
                    raise ValueError(
                        f"profile actions {labels} do not cover {want} at {key!r}"
                    ) from None
            sigma[self.isa_offset[i] : self.isa_offset[i + 1]] = probs
        if missing:
            shown = ", ".join(missing[:5])
            raise ValueError(
                f"profile missing {len(missing)} info sets (e.g. {shown})"
            )
        return sigma

    def profile_from_sigma(self, sigma: np.ndarray) -> StrategyProfile:
        table = {}
        for i, key in enumerate(self.infoset_keys):
            probs = sigma[self.isa_offset[i] : self.isa_offset[i + 1]]
            table[key] = (self.infoset_actions[i], probs)
        return StrategyProfile(table)

    def _as_sigma(self, strategy) -> np.ndarray:
        if isinstance(strategy, StrategyProfile):
            return self.sigma_from_profile(strategy)
        sigma = np.asarray(strategy, dtype=np.float64)
        if sigma.shape != (self.n_isa,):
            raise ValueError("sigma has wrong length for this game")
        return sigma

    # ------------------------------------------------------------ traversal
    def edge_weights(self, sigma: np.ndarray) -> np.ndarray:
        w = self.edge_prob.copy()
        for p in (0, 1):
            pe = self.player_edges[p]
            w[pe] = sigma[self.edge_isa[pe]]
        return w

    def reaches(self, sigma: np.ndarray):
        """Per-node reach products (seat0, seat1, chance)."""
        w = self.edge_weights(sigma)
        r0 = np.zeros(self.n_nodes)
        r1 = np.zeros(self.n_nodes)
        rc = np.zeros(self.n_nodes)
        r0[0] = r1[0] = rc[0] = 1.0
        pactor = self.actor[self.edge_parent]
        for grp in self.by_depth:
            e = grp.edges
            if not e.size:
                continue
            pa, ch = self.edge_parent[e], self.edge_child[e]
            a = pactor[e]
            we = w[e]
            r0[ch] = r0[pa] * np.where(a == 0, we, 1.0)
            r1[ch] = r1[pa] * np.where(a == 1, we, 1.0)
            rc[ch] = rc[pa] * np.where(a == -1, we, 1.0)
        return r0, r1, rc

    def counterfactual_values(self, player: int, sigma: np.ndarray, reaches=None):
        """Node values cv[h] = pi_{-p}(h) * E[u_p | h] plus per-action sums.

        Returns (cv over nodes, visa over info-set actions).
        """
        if reaches is None:
            reaches = self.reaches(sigma)
        r0, r1, rc = reaches
        reach_minus = rc * (r1 if player == 0 else r0)
        cv = np.zeros(self.n_nodes)
        term = self.terminals
        upay = self.util0 if player == 0 else -self.util0
        cv[term] = reach_minus[term] * upay[term]
        w = self.edge_weights(sigma)
        own = np.zeros(self.n_edges, dtype=bool)
        own[self.player_edges[player]] = True
        for grp in reversed(self.by_depth):
            e = grp.edges
            if not e.size:
                continue
            vals = cv[self.edge_child[e]] * np.where(own[e], w[e], 1.0)
            cv[grp.parents] = np.add.reduceat(vals, grp.seg_offsets)
        pe = self.player_edges[player]
        visa = np.zeros(self.n_isa)
        np.add.at(visa, self.edge_isa[pe], cv[self.edge_child[pe]])
        return cv, visa

    def expected_value(self, strategy) -> tuple[float, float]:
        """Seat utilities in chips under a complete profile."""
        sigma = self._as_sigma(strategy)
        w = self.edge_weights(sigma)
        reach = np.zeros(self.n_nodes)
        reach[0] = 1.0
        for grp in self.by_depth:
            e = grp.edges
            if e.size:
                reach[self.edge_child[e]] = reach[self.edge_parent[e]] * w[e]
        term = self.terminals
        v0 = float(np.dot(reach[term], self.util0[term]))
        return v0, -v0

    def best_response(self, strategy, player: int):
        """Best response value and pure profile for ``player``.

        The responder maximizes counterfactual value per information set
        bottom-up while the opponent (and chance) keep their weights.
        """
        sigma = self._as_sigma(strategy)
        w = self.edge_weights(sigma)
        opp = 1 - player
        reach_minus = np.zeros(self.n_nodes)
        reach_minus[0] = 1.0
        pactor = self.actor[self.edge_parent]
        for grp in self.by_depth:
            e = grp.edges
            if not e.size:
                continue
            we = np.where(pactor[e] == player, 1.0, w[e])
            reach_minus[self.edge_child[e]] = reach_minus[self.edge_parent[e]] * we
        cv = np.zeros(self.n_nodes)
        term = self.terminals
        upay = self.util0 if player == 0 else -self.util0
        cv[term] = reach_minus[term] * upay[term]

        choice = np.zeros(self.n_infosets, dtype=np.int64)
        q = np.zeros(self.n_isa)
        own_edge = np.zeros(self.n_edges, dtype=bool)
        own_edge[self.player_edges[player]] = True
        for d in range(len(self.by_depth) - 1, -1, -1):
            grp = self.by_depth[d]
            e = grp.edges
            if not e.size:
                continue
            mine = own_edge[e]
            if mine.any():
                me = e[mine]
                np.add.at(q, self.edge_isa[me], cv[self.edge_child[me]])
            vals = cv[self.edge_child[e]] * np.where(mine, 0.0, w[e])
            sums = np.add.reduceat(vals, grp.seg_offsets)
            cv[grp.parents] = sums
            infosets = self.infosets_at_depth[player].get(d)
            if infosets is None:
                continue
            for i in infosets:
                lo, hi = self.isa_offset[i], self.isa_offset[i + 1]
                choice[i] = int(np.argmax(q[lo:hi]))
            # overwrite own nodes with the chosen action's child value
            own_parents = grp.parents[self.actor[grp.parents] == player]
            if own_parents.size:
                sel = (
                    self.node_edge_start[own_parents]
                    + choice[self.infoset_of_node[own_parents]]
                )
                cv[own_parents] = cv[self.edge_child[sel]]
        value = float(cv[0])

        table = {}
        for i, key in enumerate(self.infoset_keys):
            if self.infoset_player[i] != player:
                continue
            labels = self.infoset_actions[i]
            probs = np.zeros(len(labels))
            probs[choice[i]] = 1.0
            table[key] = (labels, probs)
        return value, StrategyProfile(table)

    def exploitability(self, strategy) -> float:
        """Average best-response gain; 0 iff the profile is a Nash eq."""
        b0, _ = self.best_response(strategy, 0)
        b1, _ = self.best_response(strategy, 1)
        return (b0 + b1) / 2.0

    # -------------------------------------------------------------- reports
    def stats_report(self) -> str:
        lines = ["round  players  chance  terminal  infosets"]
        names = self.spec.round_names
        for r, name in enumerate(names):
            sel = self.round_of_node == r
            np_, nc, nt = (
                int((self.kind[sel] == NODE_PLAYER).sum()),
                int((self.kind[sel] == NODE_CHANCE).sum()),
                int((self.kind[sel] == NODE_TERMINAL).sum()),
            )
            ni = int((self.infoset_round == r).sum())
            lines.append(f"{name:<9}{np_:>7}{nc:>8}{nt:>10}{ni:>10}")
        lines.append(
            f"total nodes {self.n_nodes}, edges {self.n_edges}, "
            f"infosets {self.n_infosets}"
        )
        return "\n".join(lines)


class _Builder:
    def __init__(self, spec: GameSpec, budget: int):
        self.spec = spec
        self.budget = budget
        self.kind: list[int] = []
        self.actor: list[int] = []
        self.depth: list[int] = []
        self.round_of: list[int] = []
        self.util0: list[float] = []
        self.infoset_of: list[int] = []
        self.children: list[list[tuple[int, float, int, int, str]]] = []
        # infosets
        self.ikeys: dict[str, int] = {}
        self.iplayer: list[int] = []
        self.iactions: list[tuple[str, ...]] = []
        self.iround: list[int] = []

    def add_node(self, kind: int, actor: int, depth: int, rnd: int, util: float = 0.0,
                 infoset: int = -1) -> int:
        if len(self.kind) >= self.budget:
            raise TreeBudgetError(self.spec.round_names[rnd], self.budget)
        self.kind.append(kind)
        self.actor.append(actor)
        self.depth.append(depth)
        self.round_of.append(rnd)
        self.util0.append(util)
        self.infoset_of.append(infoset)
        self.children.append([])
        return len(self.kind) - 1

    def infoset(self, key: str, player: int, labels: tuple[str, ...], rnd: int) -> int:
        if key in self.ikeys:
            i = self.ikeys[key]
            if self.iactions[i] != labels:
                raise ValueError(f"inconsistent actions at info set {key!r}")
            return i
        i = len(self.iplayer)
        self.ikeys[key] = i
        self.iplayer.append(player)
        self.iactions.append(labels)
        self.iround.append(rnd)
        return i

    def finalize(self) -> Game:
        counts = [len(a) for a in self.iactions]
        isa_offset = np.zeros(len(counts) + 1, dtype=np.int64)
        np.cumsum(counts, out=isa_offset[1:])
        n_nodes = len(self.kind)
        edge_parent, edge_child, edge_prob, edge_isa, edge_label = [], [], [], [], []
        node_edge_start = np.zeros(n_nodes, dtype=np.int64)
        node_edge_count = np.zeros(n_nodes, dtype=np.int64)
        node_parent_edge = np.full(n_nodes, -1, dtype=np.int64)
        for node in range(n_nodes):
            node_edge_start[node] = len(edge_parent)
            node_edge_count[node] = len(self.children[node])
            for child, prob, infoset, a_local, label in self.children[node]:
                node_parent_edge[child] = len(edge_parent)
                edge_parent.append(node)
                edge_child.append(child)
                edge_prob.append(prob)
                edge_isa.append(-1 if infoset < 0 else int(isa_offset[infoset]) + a_local)
                edge_label.append(label)
        return Game(
            spec=self.spec,
            kind=np.array(self.kind, dtype=np.int8),
            actor=np.array(self.actor, dtype=np.int8),
            depth=np.array(self.depth, dtype=np.int16),
            round_of_node=np.array(self.round_of, dtype=np.int8),
            util0=np.array(self.util0, dtype=np.float64),
            infoset_of_node=np.array(self.infoset_of, dtype=np.int64),
            node_edge_start=node_edge_start,
            node_edge_count=node_edge_count,
            node_parent_edge=node_parent_edge,
            edge_parent=np.array(edge_parent, dtype=np.int64),
            edge_child=np.array(edge_child, dtype=np.int64),
            edge_prob=np.array(edge_prob, dtype=np.float64),
            edge_isa=np.array(edge_isa, dtype=np.int64),
            edge_label=edge_label,
            infoset_keys=list(self.ikeys),
            infoset_player=np.array(self.iplayer, dtype=np.int8),
            infoset_actions=list(self.iactions),
            isa_offset=isa_offset,
            infoset_round=np.array(self.iround, dtype=np.int8),
        )


def _toy_actions(state: HandState) -> list[ActionSpec]:
    la = engine.legal_actions(state)
    out = []
    if la.can_fold:
        out.append(engine.fold())
    out.append(la.check_or_call())
    if la.can_raise:
        out.append(engine.raise_to(la.min_raise_to))
    return out


def _build_toy(spec: GameSpec, budget: int) -> Game:
    b = _Builder(spec, budget)
    draw = 2 * spec.cards_per_player + spec.board_counts[-1]
    deals = list(itertools.permutations(spec.deck, draw))
    prob = 1.0 / len(deals)
    root = b.add_node(NODE_CHANCE, -1, 0, 0)

    def walk(state: HandState, depth: int) -> int:
        if state.terminal:
            u0 = float(engine.settle(state).chips[0])
            return b.add_node(NODE_TERMINAL, -1, depth, state.round_index, util=u0)
        seat = state.to_act
        actions = _toy_actions(state)
        labels = tuple(a.label for a in actions)
        key = toy_infoset_key(
            seat, state.deal.private[seat], state.board, state.history
        )
        infoset = b.infoset(key, seat, labels, state.round_index)
        node = b.add_node(
            NODE_PLAYER, seat, depth, state.round_index, infoset=infoset
        )
        for a_local, action in enumerate(actions):
            child = walk(engine.apply_action(state, action), depth + 1)
            b.children[node].append((child, 1.0, infoset, a_local, action.label))
        return node

    cp = spec.cards_per_player
    for cards in deals:
        deal = Deal(
            (tuple(cards[:cp]), tuple(cards[cp : 2 * cp])),
            tuple(cards[2 * cp :]),
        )
        state = engine.new_hand(spec, deal=deal)
        child = walk(state, 1)
        label = "".join(c.text for c in cards)
        b.children[root].append((child, prob, -1, 0, label))
    return b.finalize()


def _build_hunl_abstract(
    spec: GameSpec, menu, model, budget: int, prob_floor: float = 1e-12
) -> Game:
    """Bucket-level HUNL tree: chance deals buckets, betting uses the menu."""
    b = _Builder(spec, budget)
    placeholder = Deal(
        (tuple(spec.deck[0:2]), tuple(spec.deck[2:4])), tuple(spec.deck[4:9])
    )

    def player_walk(state: HandState, buckets: tuple[tuple[int, ...], tuple[int, ...]],
                    labels: str, depth: int) -> int:
        rnd = state.round_index
        if state.terminal:
            if state.reason == "fold":
                u0 = float(engine.settle(state).chips[0])
            else:
                contrib = spec.stack - state.remaining[0]
                w = model.expected_win(len(buckets[0]) - 1, buckets[0][-1], buckets[1][-1])
                u0 = contrib * (2.0 * w - 1.0)
            return b.add_node(NODE_TERMINAL, -1, depth, rnd, util=u0)
        if rnd > len(buckets[0]) - 1:
            # betting round closed: deal next-street buckets
            node = b.add_node(NODE_CHANCE, -1, depth, rnd)
            t = model.transitions[rnd - 1][buckets[0][-1], buckets[1][-1]]
            for b0 in range(t.shape[0]):
                for b1 in range(t.shape[1]):
                    p = float(t[b0, b1])
                    if p <= prob_floor:
                        continue
                    nxt = (buckets[0] + (b0,), buckets[1] + (b1,))
                    child = player_walk(state, nxt, labels + "/", depth + 1)
                    b.children[node].append((child, p, -1, 0, f"{b0}.{b1}"))
            return node
        seat = state.to_act
        actions = menu.actions(engine.view(state, seat))
        act_labels = tuple(lab for lab, _ in actions)
        key = bucket_infoset_key(seat, buckets[seat], labels)
        infoset = b.infoset(key, seat, act_labels, rnd)
        node = b.add_node(NODE_PLAYER, seat, depth, rnd, infoset=infoset)
        for a_local, (lab, action) in enumerate(actions):
            nxt = engine.apply_action(state, action)
            child = player_walk(nxt, buckets, labels + lab, depth + 1)
            b.children[node].append((child, 1.0, infoset, a_local, lab))
        return node

    root = b.add_node(NODE_CHANCE, -1, 0, 0)
    k0 = model.root.shape[0]
    for b0 in range(k0):
        for b1 in range(model.root.shape[1]):
            p = float(model.root[b0, b1])
            if p <= prob_floor:
                continue
            state = engine.new_hand(spec, deal=placeholder)
            child = player_walk(state, ((b0,), (b1,)), "", 1)
            b.children[root].append((child, p, -1, 0, f"{b0}.{b1}"))
    return b.finalize()


def build_tree(
    spec: GameSpec,
    action_abstraction=None,
    chance_model=None,
    node_budget: int = 2_000_000,
) -> Game:
    """Materialize the full tree for a game spec.

    Toy variants enumerate real deals; ``hunl`` requires both an action
    abstraction (bet menu) and a bucket chance model.
    """
    if spec.variant in ("kuhn", "leduc"):
        return _build_toy(spec, node_budget)
    if spec.variant == "hunl":
        if action_abstraction is None or chance_model is None:
            raise ValueError(
                "hunl trees need action_abstraction and chance_model"
            )
        return _build_hunl_abstract(spec, action_abstraction, chance_model, node_budget)
    raise ValueError(f"unknown variant {spec.variant!r}")


def expected_value(game: Game, strategy) -> tuple[float, float]:
    return game.expected_value(strategy)


def best_response(game: Game, strategy, player: int):
    return game.best_response(strategy, player)


def exploitability(game: Game, strategy) -> float:
    return game.exploitability(strategy)

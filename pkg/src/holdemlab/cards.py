"""Playing cards and poker hand evaluation.

Cards are (rank, suit) pairs with ranks 0..12 mapping to 2..A and suits
0..3 mapping to clubs/diamonds/hearts/spades.  Every card also has a dense
integer index ``rank * 4 + suit`` used by the array-based fast paths.

Hand strength is a :class:`HandRank`: a category from :class:`HandCategory`
plus a tiebreak tuple of card ranks, ordered so that plain tuple comparison
gives the standard poker total order.  A royal flush is simply the maximal
straight flush, not a separate category.
"""

from __future__ import annotations

import itertools
from enum import IntEnum
from typing import Iterable, NamedTuple, Sequence

import numpy as np

RANK_CHARS = "23456789TJQKA"
SUIT_CHARS = "cdhs"

NUM_RANKS = 13
NUM_SUITS = 4
DECK_SIZE = 52


class Card(NamedTuple):
    rank: int
    suit: int

    @property
    def index(self) -> int:
        """Dense index in 0..51 (rank-major)."""
        return self.rank * 4 + self.suit

    @property
    def text(self) -> str:
        return RANK_CHARS[self.rank] + SUIT_CHARS[self.suit]

    @classmethod
    def from_index(cls, index: int) -> "Card":
        if not 0 <= index < DECK_SIZE:
            raise ValueError(f"card index out of range: {index}")
        return cls(index // 4, index % 4)

    @classmethod
    def from_text(cls, text: str) -> "Card":
        if len(text) != 2:
            raise ValueError(f"bad card text: {text!r}")
        try:
            rank = RANK_CHARS.index(text[0].upper())
            suit = SUIT_CHARS.index(text[1].lower())
        except ValueError:
            raise ValueError(f"bad card text: {text!r}") from None
        return cls(rank, suit)

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"Card({self.text!r})"


def cards_from_text(text: str) -> tuple[Card, ...]:
    """Parse ``"As Kd"`` or ``"AsKd"`` into cards."""
    compact = text.replace(",", " ").split()
    if len(compact) == 1 and len(compact[0]) > 2:
        s = compact[0]
        compact = [s[i : i + 2] for i in range(0, len(s), 2)]
    return tuple(Card.from_text(t) for t in compact)


def cards_to_text(cards: Iterable[Card]) -> str:
    return " ".join(c.text for c in cards)


def full_deck() -> list[Card]:
    return [Card.from_index(i) for i in range(DECK_SIZE)]


class HandCategory(IntEnum):
    HIGH_CARD = 0
    PAIR = 1
    TWO_PAIR = 2
    TRIPS = 3
    STRAIGHT = 4
    FLUSH = 5
    FULL_HOUSE = 6
    QUADS = 7
    STRAIGHT_FLUSH = 8


class HandRank(NamedTuple):
    """Total-order hand strength: compare with <, ==, etc."""

    category: HandCategory
    tiebreak: tuple[int, ...]

    def packed(self) -> int:
        """Pack into one int; order-compatible with tuple comparison."""
        t = self.tiebreak + (0,) * (5 - len(self.tiebreak))
        return (
            (int(self.category) << 20)
            | (t[0] << 16)
            | (t[1] << 12)
            | (t[2] << 8)
            | (t[3] << 4)
            | t[4]
        )


def _straight_high(mask: int) -> int:
    """Highest straight top-rank in a 13-bit rank mask, or -1.

    The wheel (A-2-3-4-5) counts with top rank 5 (index 3).
    """
    for high in range(12, 2, -1):
        if high == 3:  # wheel: A plays low
            need = (1 << 3) | (1 << 2) | (1 << 1) | (1 << 0) | (1 << 12)
        else:
            need = 0
            for r in range(high - 4, high + 1):
                need |= 1 << r
        if mask & need == need:
            return high
    return -1


_STRAIGHT_HIGH = np.full(1 << NUM_RANKS, -1, dtype=np.int8)
for _m in range(1 << NUM_RANKS):
    _STRAIGHT_HIGH[_m] = _straight_high(_m)

# Top five set bits of a rank mask, descending, padded with 0.
_TOP5 = np.zeros((1 << NUM_RANKS, 5), dtype=np.int8)
for _m in range(1 << NUM_RANKS):
    bits = [r for r in range(NUM_RANKS - 1, -1, -1) if _m & (1 << r)][:5]
    for _j, _r in enumerate(bits):
        _TOP5[_m, _j] = _r


def _classify(ranks: Sequence[int], flush: bool) -> HandRank:
    """Categorize five card ranks (any order) with a known flush flag."""
    counts = [0] * NUM_RANKS
    for r in ranks:
        counts[r] += 1
    mask = 0
    for r in range(NUM_RANKS):
        if counts[r]:
            mask |= 1 << r
    straight = int(_STRAIGHT_HIGH[mask])
    if flush and straight >= 0:
        return HandRank(HandCategory.STRAIGHT_FLUSH, (straight,))
    quads = [r for r in range(12, -1, -1) if counts[r] == 4]
    if quads:
        kicker = max(r for r in range(NUM_RANKS) if counts[r] and r != quads[0])
        return HandRank(HandCategory.QUADS, (quads[0], kicker))
    trips = [r for r in range(12, -1, -1) if counts[r] == 3]
    pairs = [r for r in range(12, -1, -1) if counts[r] == 2]
    if trips and pairs:
        return HandRank(HandCategory.FULL_HOUSE, (trips[0], pairs[0]))
    singles = [r for r in range(12, -1, -1) if counts[r] == 1]
    if flush:
        return HandRank(HandCategory.FLUSH, tuple(singles))
    if straight >= 0:
        return HandRank(HandCategory.STRAIGHT, (straight,))
    if trips:
        return HandRank(HandCategory.TRIPS, (trips[0],) + tuple(singles[:2]))
    if len(pairs) >= 2:
        kicker = max(r for r in range(NUM_RANKS) if counts[r] and r not in pairs[:2])
        return HandRank(HandCategory.TWO_PAIR, (pairs[0], pairs[1], kicker))
    if pairs:
        return HandRank(HandCategory.PAIR, (pairs[0],) + tuple(singles[:3]))
    return HandRank(HandCategory.HIGH_CARD, tuple(singles))


def _build_five_table() -> dict[tuple[tuple[int, ...], bool], HandRank]:
    table: dict[tuple[tuple[int, ...], bool], HandRank] = {}
    for combo in itertools.combinations_with_replacement(range(NUM_RANKS), 5):
        counts = [combo.count(r) for r in set(combo)]
        if max(counts) > 4:
            continue
        key_ranks = tuple(sorted(combo, reverse=True))
        table[(key_ranks, False)] = _classify(combo, False)
        if max(counts) == 1:
            table[(key_ranks, True)] = _classify(combo, True)
    return table


_FIVE_TABLE = _build_five_table()


def _check_distinct(cards: Sequence[Card], n: int) -> None:
    if len(cards) != n:
        raise ValueError(f"expected {n} cards, got {len(cards)}")
    if len({(c.rank, c.suit) for c in cards}) != n:
        raise ValueError(f"duplicate cards in {cards_to_text(cards)}")


def evaluate5(cards: Sequence[Card]) -> HandRank:
    """Rank a five-card hand."""
    _check_distinct(cards, 5)
    ranks = tuple(sorted((c.rank for c in cards), reverse=True))
    flush = len({c.suit for c in cards}) == 1
    return _FIVE_TABLE[(ranks, flush)]


def evaluate7(cards: Sequence[Card]) -> HandRank:
    """Rank the best five-card hand out of seven cards.

    Direct count-based evaluation; equivalent to maximizing
    :func:`evaluate5` over all 21 five-card subsets.
    """
    _check_distinct(cards, 7)
    counts = [0] * NUM_RANKS
    suit_counts = [0] * NUM_SUITS
    mask = 0
    for c in cards:
        counts[c.rank] += 1
        suit_counts[c.suit] += 1
        mask |= 1 << c.rank

    flush_suit = -1
    for s in range(NUM_SUITS):
        if suit_counts[s] >= 5:
            flush_suit = s
            break
    if flush_suit >= 0:
        fmask = 0
        for c in cards:
            if c.suit == flush_suit:
                fmask |= 1 << c.rank
        sf = int(_STRAIGHT_HIGH[fmask])
        if sf >= 0:
            return HandRank(HandCategory.STRAIGHT_FLUSH, (sf,))

    quad = next((r for r in range(12, -1, -1) if counts[r] == 4), -1)
    if quad >= 0:
        kicker = max(r for r in range(NUM_RANKS) if counts[r] and r != quad)
        return HandRank(HandCategory.QUADS, (quad, kicker))

    trips = [r for r in range(12, -1, -1) if counts[r] == 3]
    pairs = [r for r in range(12, -1, -1) if counts[r] == 2]
    if trips and (len(trips) > 1 or pairs):
        pair_part = max(pairs[0] if pairs else -1, trips[1] if len(trips) > 1 else -1)
        return HandRank(HandCategory.FULL_HOUSE, (trips[0], pair_part))

    if flush_suit >= 0:
        top = _TOP5[fmask]
        return HandRank(HandCategory.FLUSH, tuple(int(r) for r in top))

    straight = int(_STRAIGHT_HIGH[mask])
    if straight >= 0:
        return HandRank(HandCategory.STRAIGHT, (straight,))

    if trips:
        rest = mask & ~(1 << trips[0])
        k = _TOP5[rest]
        return HandRank(HandCategory.TRIPS, (trips[0], int(k[0]), int(k[1])))
    if len(pairs) >= 2:
        rest = mask & ~(1 << pairs[0]) & ~(1 << pairs[1])
        k = _TOP5[rest]
        return HandRank(HandCategory.TWO_PAIR, (pairs[0], pairs[1], int(k[0])))
    if pairs:
        rest = mask & ~(1 << pairs[0])
        k = _TOP5[rest]
        return HandRank(
            HandCategory.PAIR, (pairs[0], int(k[0]), int(k[1]), int(k[2]))
        )
    top = _TOP5[mask]
    return HandRank(HandCategory.HIGH_CARD, tuple(int(r) for r in top))


def cards_to_indices(cards: Sequence[Card]) -> np.ndarray:
    return np.fromiter((c.index for c in cards), dtype=np.int16, count=len(cards))


_RANK_BITS = (1 << np.arange(NUM_RANKS, dtype=np.int32))


def batch_evaluate(cards: np.ndarray) -> np.ndarray:
    """Packed strengths for many hands at once.

    ``cards`` is an (N, k) integer array of card indices with k in 5..7.
    Returns an (N,) int64 array whose values compare exactly like
    ``HandRank.packed()`` of the corresponding scalar evaluation.
    """
    cards = np.asarray(cards)
    if cards.ndim != 2 or not 5 <= cards.shape[1] <= 7:
        raise ValueError("cards must be (N, k) with 5 <= k <= 7")
    n, k = cards.shape
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    ranks = (cards >> 2).astype(np.int8)
    suits = (cards & 3).astype(np.int8)

    cnt = (ranks[:, :, None] == np.arange(NUM_RANKS, dtype=np.int8)).sum(
        axis=1, dtype=np.int8
    )
    rmask = np.bitwise_or.reduce(_RANK_BITS[ranks], axis=1)

    scnt = (suits[:, :, None] == np.arange(NUM_SUITS, dtype=np.int8)).sum(
        axis=1, dtype=np.int8
    )
    has_flush = (scnt >= 5).any(axis=1)
    flush_suit = np.argmax(scnt >= 5, axis=1).astype(np.int8)
    fmask = np.bitwise_or.reduce(
        np.where(suits == flush_suit[:, None], _RANK_BITS[ranks], 0), axis=1
    )

    sf_high = _STRAIGHT_HIGH[fmask].astype(np.int32)
    is_sf = has_flush & (sf_high >= 0)

    def top_rank(m: np.ndarray) -> np.ndarray:
        """Highest rank whose count matches the mask m (N, 13)."""
        return (NUM_RANKS - 1) - np.argmax(m[:, ::-1], axis=1).astype(np.int32)

    m4 = cnt == 4
    has_quads = m4.any(axis=1)
    quad_rank = top_rank(m4)
    not_quad = rmask & ~np.where(has_quads, _RANK_BITS[quad_rank % NUM_RANKS], 0)
    quad_kick = _TOP5[not_quad, 0].astype(np.int32)

    m3 = cnt == 3
    n3 = m3.sum(axis=1)
    t1 = top_rank(m3)
    m3b = m3.copy()
    np.put_along_axis(m3b, (t1 % NUM_RANKS)[:, None], False, axis=1)
    t2 = top_rank(m3b)
    m2 = cnt == 2
    n2 = m2.sum(axis=1)
    p1 = top_rank(m2)
    m2b = m2.copy()
    np.put_along_axis(m2b, (p1 % NUM_RANKS)[:, None], False, axis=1)
    p2 = top_rank(m2b)

    has_fh = (n3 >= 1) & ((n3 >= 2) | (n2 >= 1))
    fh_pair = np.maximum(np.where(n3 >= 2, t2, -1), np.where(n2 >= 1, p1, -1))

    st_high = _STRAIGHT_HIGH[rmask].astype(np.int32)
    has_straight = st_high >= 0

    flush_top = _TOP5[fmask].astype(np.int32)

    has_trips = n3 >= 1
    trips_rest = rmask & ~np.where(has_trips, _RANK_BITS[t1 % NUM_RANKS], 0)
    trips_kick = _TOP5[trips_rest].astype(np.int32)

    has_2p = n2 >= 2
    tp_rest = rmask & ~(
        np.where(n2 >= 1, _RANK_BITS[p1 % NUM_RANKS], 0)
        | np.where(n2 >= 2, _RANK_BITS[p2 % NUM_RANKS], 0)
    )
    tp_kick = _TOP5[tp_rest].astype(np.int32)

    has_pair = n2 >= 1
    pair_rest = rmask & ~np.where(has_pair, _RANK_BITS[p1 % NUM_RANKS], 0)
    pair_kick = _TOP5[pair_rest].astype(np.int32)

    high_top = _TOP5[rmask].astype(np.int32)

    def pack(cat: int, t0, t1=0, t2=0, t3=0, t4=0) -> np.ndarray:
        out = (np.int64(cat) << 20) + (t0.astype(np.int64) << 16)
        for shift, t in ((12, t1), (8, t2), (4, t3), (0, t4)):
            if isinstance(t, np.ndarray):
                out += t.astype(np.int64) << shift
            elif t:
                out += t << shift
        return out

    packed = np.select(
        [
            is_sf,
            has_quads,
            has_fh,
            has_flush,
            has_straight,
            has_trips,
            has_2p,
            has_pair,
        ],
        [
            pack(HandCategory.STRAIGHT_FLUSH, sf_high),
            pack(HandCategory.QUADS, quad_rank, quad_kick),
            pack(HandCategory.FULL_HOUSE, t1, fh_pair),
            pack(
                HandCategory.FLUSH,
                flush_top[:, 0],
                flush_top[:, 1],
                flush_top[:, 2],
                flush_top[:, 3],
                flush_top[:, 4],
            ),
            pack(HandCategory.STRAIGHT, st_high),
            pack(HandCategory.TRIPS, t1, trips_kick[:, 0], trips_kick[:, 1]),
            pack(HandCategory.TWO_PAIR, p1, p2, tp_kick[:, 0]),
            pack(
                HandCategory.PAIR, p1, pair_kick[:, 0], pair_kick[:, 1], pair_kick[:, 2]
            ),
        ],
        default=pack(
            HandCategory.HIGH_CARD,
            high_top[:, 0],
            high_top[:, 1],
            high_top[:, 2],
            high_top[:, 3],
            high_top[:, 4],
        ),
    )
    return packed


def unpack_category(packed: np.ndarray | int):
    """Category (int or array) from packed strength values."""
    return np.asarray(packed) >> 20 if isinstance(packed, np.ndarray) else packed >> 20

"""Heads-up poker hand state machine.

One module drives three variants through the same state type:

* ``hunl`` -- no-limit Texas hold'em with 20,000-chip stacks reset every
  hand, a 100 big blind, 50 small blind and 100 minimum bet.  Seat 0 (P1)
  posts the big blind and acts first on every postflop round; seat 1 (P2)
  posts the small blind and acts first preflop.
* ``kuhn`` -- three cards, one ante, a single one-bet round.  Included so
  solver output can be checked against exactly known values.
* ``leduc`` -- six cards, one ante, two rounds (fixed bets 2 then 4, one
  bet plus one raise per round), one public card between rounds.

Raise amounts use *raise-to* semantics: the amount is the raiser's total
chips committed in the current round after the action.  A raise-by x over a
bet of b is therefore ``raise_to(b + x)``.  A re-raise must add at least
the size of the last raise; an all-in for less is legal when it is the
raiser's whole stack.  With equal stacks heads-up, a player facing an
all-in can never raise (there is nothing left to raise against), which is
how the convention that a short all-in does not re-open betting shows up
here.

Folding when a check is free is dominated and therefore illegal by
default; ``GameSpec.allow_free_fold`` turns it on for baselines built
around it (an always-fold strategy then loses 1000 mbb/h as the big blind,
500 as the small blind, 750 on average over alternating seats).
"""

from __future__ import annotations

import dataclasses
import random
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Sequence

from .cards import Card, cards_from_text, evaluate7

P1 = 0  # big blind seat in HUNL; first to act in Kuhn/Leduc and postflop
P2 = 1  # small blind seat in HUNL; first to act preflop


class ActionKind(str, Enum):
    FOLD = "fold"
    CHECK = "check"
    CALL = "call"
    RAISE_TO = "raise"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


class ActionSpec(NamedTuple):
    kind: ActionKind
    amount: int = 0

    @property
    def label(self) -> str:
        """Compact label used in history strings and info-set keys."""
        if self.kind is ActionKind.RAISE_TO:
            return f"r{self.amount}"
        return {"fold": "f", "check": "k", "call": "c"}[self.kind.value]


def fold() -> ActionSpec:
    return ActionSpec(ActionKind.FOLD)


def check() -> ActionSpec:
    return ActionSpec(ActionKind.CHECK)


def call() -> ActionSpec:
    return ActionSpec(ActionKind.CALL)


def raise_to(amount: int) -> ActionSpec:
    return ActionSpec(ActionKind.RAISE_TO, int(amount))


class IllegalActionError(ValueError):
    pass


@dataclass(frozen=True)
class GameSpec:
    """Static rules for one variant; hands never mutate it."""

    variant: str
    stack: int
    big_blind: int
    small_blind: int
    min_bet: int
    deck: tuple[Card, ...]
    cards_per_player: int
    board_counts: tuple[int, ...]  # revealed board cards per round
    round_names: tuple[str, ...]
    first_to_act: tuple[int, ...]
    ante: int = 0
    bet_sizes: Optional[tuple[int, ...]] = None  # fixed-limit rounds
    max_raises_per_round: Optional[int] = None
    allow_free_fold: bool = False

    def __post_init__(self) -> None:
        if self.stack <= 0:
            raise ValueError("stack must be positive")
        if len(self.board_counts) != len(self.round_names):
            raise ValueError("board_counts and round_names must align")
        if self.bet_sizes is not None and len(self.bet_sizes) != self.num_rounds:
            raise ValueError("bet_sizes must give one size per round")

    @property
    def num_rounds(self) -> int:
        return len(self.round_names)

    @property
    def payoff_range(self) -> int:
        """Per-hand payoff spread: win a stack vs lose a stack."""
        return 2 * self.stack

    def mbb(self, chips: float) -> float:
        """Chips -> milli-big-blinds (milli-antes for the toy games)."""
        return chips * 1000.0 / self.big_blind


def hunl_spec(stack: int = 20_000, allow_free_fold: bool = False) -> GameSpec:
    return GameSpec(
        variant="hunl",
        stack=stack,
        big_blind=100,
        small_blind=50,
        min_bet=100,
        deck=tuple(Card.from_index(i) for i in range(52)),
        cards_per_player=2,
        board_counts=(0, 3, 4, 5),
        round_names=("preflop", "flop", "turn", "river"),
        first_to_act=(P2, P1, P1, P1),
        allow_free_fold=allow_free_fold,
    )


def kuhn_spec(allow_free_fold: bool = False) -> GameSpec:
    return GameSpec(
        variant="kuhn",
        stack=2,
        big_blind=1,
        small_blind=0,
        min_bet=1,
        deck=cards_from_text("Js Qs Ks"),
        cards_per_player=1,
        board_counts=(0,),
        round_names=("preflop",),
        first_to_act=(P1,),
        ante=1,
        bet_sizes=(1,),
        max_raises_per_round=1,
        allow_free_fold=allow_free_fold,
    )


def leduc_spec(allow_free_fold: bool = False) -> GameSpec:
    return GameSpec(
        variant="leduc",
        stack=13,
        big_blind=1,
        small_blind=0,
        min_bet=2,
        deck=cards_from_text("Js Jh Qs Qh Ks Kh"),
        cards_per_player=1,
        board_counts=(0, 1),
        round_names=("preflop", "flop"),
        first_to_act=(P1, P1),
        ante=1,
        bet_sizes=(2, 4),
        max_raises_per_round=2,
        allow_free_fold=allow_free_fold,
    )


SPECS = {"hunl": hunl_spec, "kuhn": kuhn_spec, "leduc": leduc_spec}


class Deal(NamedTuple):
    private: tuple[tuple[Card, ...], ...]  # one tuple per seat
    board: tuple[Card, ...]  # full run-out, revealed per round


def deal_hand(spec: GameSpec, rng: random.Random) -> Deal:
    deck = list(spec.deck)
    rng.shuffle(deck)
    cp = spec.cards_per_player
    private = (tuple(deck[:cp]), tuple(deck[cp : 2 * cp]))
    board = tuple(deck[2 * cp : 2 * cp + spec.board_counts[-1]])
    return Deal(private, board)


@dataclass(frozen=True)
class LegalActions:
    """Menu of legal moves at one decision point.

    ``min_raise_to``/``max_raise_to`` bound the raise-to interval; both are
    ``None`` when raising is impossible (e.g. facing an all-in).  For the
    fixed-limit variants the interval collapses to a single amount.
    """

    to_call: int
    can_fold: bool
    min_raise_to: Optional[int]
    max_raise_to: Optional[int]

    @property
    def can_raise(self) -> bool:
        return self.min_raise_to is not None

    def check_or_call(self) -> ActionSpec:
        return call() if self.to_call > 0 else check()

    def kinds(self) -> list[ActionKind]:
        out = []
        if self.can_fold:
            out.append(ActionKind.FOLD)
        out.append(ActionKind.CALL if self.to_call > 0 else ActionKind.CHECK)
        if self.can_raise:
            out.append(ActionKind.RAISE_TO)
        return out

    def contains(self, action: ActionSpec) -> bool:
        kind = action.kind
        if kind is ActionKind.FOLD:
            return self.can_fold
        if kind is ActionKind.CHECK:
            return self.to_call == 0
        if kind is ActionKind.CALL:
            return self.to_call > 0
        if kind is ActionKind.RAISE_TO:
            return (
                self.can_raise
                and self.min_raise_to <= action.amount <= self.max_raise_to
            )
        return False


HistoryItem = tuple[int, str, int]  # (seat, action kind value, amount)


@dataclass(frozen=True)
class HandState:
    """Immutable snapshot of one hand; ``apply`` returns the successor."""

    spec: GameSpec
    hand_id: int
    deal: Deal
    round_index: int
    revealed: int  # board cards currently visible
    pot: int  # chips from completed rounds (antes included)
    committed: tuple[int, int]  # current-round chips per seat
    remaining: tuple[int, int]
    to_act: Optional[int]
    acted: tuple[bool, bool]
    last_raise: int
    raises_this_round: int
    history: tuple[tuple[HistoryItem, ...], ...]
    reason: Optional[str] = None  # None | "fold" | "showdown"
    folder: Optional[int] = None

    @property
    def terminal(self) -> bool:
        return self.reason is not None

    @property
    def board(self) -> tuple[Card, ...]:
        return self.deal.board[: self.revealed]

    @property
    def round(self) -> str:
        if self.reason == "fold":
            return "folded"
        if self.reason == "showdown":
            return "showdown"
        return self.spec.round_names[self.round_index]

    @property
    def pot_total(self) -> int:
        """All chips in the middle, current round included."""
        return self.pot + self.committed[0] + self.committed[1]

    def private_cards(self, seat: int) -> tuple[Card, ...]:
        return self.deal.private[seat]

    def flat_history(self) -> list[HistoryItem]:
        return [item for rnd in self.history for item in rnd]


def new_hand(
    spec: GameSpec,
    hand_id: int = 0,
    seed: Optional[int] = None,
    rng: Optional[random.Random] = None,
    deal: Optional[Deal] = None,
) -> HandState:
    """Deal and post blinds/antes.  Same seed -> identical deal."""
    if deal is None:
        if rng is None:
            rng = random.Random(seed)
        deal = deal_hand(spec, rng)
    if spec.ante:
        pot = 2 * spec.ante
        committed = (0, 0)
        remaining = (spec.stack - spec.ante, spec.stack - spec.ante)
        last_raise = 0
    else:
        pot = 0
        committed = (spec.big_blind, spec.small_blind)
        remaining = (spec.stack - spec.big_blind, spec.stack - spec.small_blind)
        last_raise = spec.big_blind
    return HandState(
        spec=spec,
        hand_id=hand_id,
        deal=deal,
        round_index=0,
        revealed=spec.board_counts[0],
        pot=pot,
        committed=committed,
        remaining=remaining,
        to_act=spec.first_to_act[0],
        acted=(False, False),
        last_raise=last_raise,
        raises_this_round=0,
        history=((),),
    )


def legal_actions(state: HandState) -> LegalActions:
    if state.terminal or state.to_act is None:
        raise ValueError("hand is over; no legal actions")
    spec = state.spec
    me = state.to_act
    opp = 1 - me
    to_call = state.committed[opp] - state.committed[me]
    assert 0 <= to_call <= state.remaining[me], "heads-up equal stacks"
    can_fold = to_call > 0 or spec.allow_free_fold

    min_to = max_to = None
    opponent_live = state.remaining[opp] > 0
    if opponent_live and state.remaining[me] > to_call:
        if spec.bet_sizes is not None:
            if state.raises_this_round < spec.max_raises_per_round:
                size = spec.bet_sizes[state.round_index]
                target = state.committed[opp] + size
                if target <= state.committed[me] + state.remaining[me]:
                    min_to = max_to = target
        else:
            max_to = state.committed[me] + state.remaining[me]
            min_to = state.committed[opp] + max(state.last_raise, spec.min_bet)
            min_to = min(min_to, max_to)  # all-in for less is allowed
    return LegalActions(to_call, can_fold, min_to, max_to)


def _close_round(state: HandState, history: tuple) -> HandState:
    spec = state.spec
    pot = state.pot + state.committed[0] + state.committed[1]
    last_round = state.round_index == spec.num_rounds - 1
    someone_all_in = state.remaining[0] == 0 or state.remaining[1] == 0
    if last_round or someone_all_in:
        return dataclasses.replace(
            state,
            pot=pot,
            committed=(0, 0),
            revealed=spec.board_counts[-1],
            round_index=spec.num_rounds - 1,
            to_act=None,
            history=history,
            reason="showdown",
        )
    nxt = state.round_index + 1
    return dataclasses.replace(
        state,
        round_index=nxt,
        revealed=spec.board_counts[nxt],
        pot=pot,
        committed=(0, 0),
        to_act=spec.first_to_act[nxt],
        acted=(False, False),
        last_raise=0,
        raises_this_round=0,
        history=history + ((),),
    )


def apply_action(state: HandState, action: ActionSpec) -> HandState:
    """Validate and apply one action, returning the successor state."""
    legal = legal_actions(state)
    if not legal.contains(action):
        raise IllegalActionError(f"illegal action {action} at {state.round}")
    me = state.to_act
    opp = 1 - me
    record = (me, action.kind.value, action.amount)
    history = state.history[:-1] + (state.history[-1] + (record,),)

    if action.kind is ActionKind.FOLD:
        return dataclasses.replace(
            state, to_act=None, history=history, reason="fold", folder=me
        )

    if action.kind in (ActionKind.CHECK, ActionKind.CALL):
        pay = legal.to_call
        committed = list(state.committed)
        remaining = list(state.remaining)
        committed[me] += pay
        remaining[me] -= pay
        acted = list(state.acted)
        acted[me] = True
        nxt = dataclasses.replace(
            state,
            committed=tuple(committed),
            remaining=tuple(remaining),
            acted=tuple(acted),
            history=history,
        )
        if acted[opp]:
            return _close_round(nxt, history)
        return dataclasses.replace(nxt, to_act=opp)

    # raise-to
    target = action.amount
    pay = target - state.committed[me]
    committed = list(state.committed)
    remaining = list(state.remaining)
    committed[me] = target
    remaining[me] -= pay
    acted = list(state.acted)
    acted[me] = True
    raise_size = target - state.committed[opp]
    full_raise = raise_size >= max(state.last_raise, state.spec.min_bet)
    return dataclasses.replace(
        state,
        committed=tuple(committed),
        remaining=tuple(remaining),
        acted=tuple(acted),
        last_raise=raise_size if full_raise else state.last_raise,
        raises_this_round=state.raises_this_round + 1,
        to_act=opp,
        history=history,
    )


class PayoffRecord(NamedTuple):
    chips: tuple[int, int]
    mbb: tuple[float, float]


def _showdown_key(spec: GameSpec, private: tuple[Card, ...], board: tuple[Card, ...]):
    if spec.variant == "hunl":
        return evaluate7(tuple(private) + tuple(board))
    if spec.variant == "kuhn":
        return private[0].rank
    # leduc: pairing the board card beats any high card
    paired = board and private[0].rank == board[0].rank
    return (1 if paired else 0, private[0].rank)


def settle(state: HandState) -> PayoffRecord:
    """Terminal payoffs in chips and mbb (positive = seat won chips)."""
    if not state.terminal:
        raise ValueError("cannot settle a live hand")
    spec = state.spec
    contribution = [
        spec.stack - state.remaining[0],
        spec.stack - state.remaining[1],
    ]
    if state.reason == "fold":
        winner = 1 - state.folder
        win = contribution[state.folder]
    else:
        k0 = _showdown_key(spec, state.deal.private[0], state.board)
        k1 = _showdown_key(spec, state.deal.private[1], state.board)
        if k0 == k1:
            return PayoffRecord((0, 0), (0.0, 0.0))
        winner = 0 if k0 > k1 else 1
        win = contribution[1 - winner]
    chips = [0, 0]
    chips[winner] = win
    chips[1 - winner] = -win
    return PayoffRecord(tuple(chips), (spec.mbb(chips[0]), spec.mbb(chips[1])))


def replay(
    spec: GameSpec,
    deal: Deal,
    actions: Sequence[tuple[int, str, int]],
    hand_id: int = 0,
) -> HandState:
    """Re-drive a recorded hand; raises if any recorded step is illegal."""
    state = new_hand(spec, hand_id=hand_id, deal=deal)
    for seat, kind, amount in actions:
        if state.terminal or state.to_act != seat:
            raise IllegalActionError(f"history desync at {(seat, kind, amount)}")
        state = apply_action(state, ActionSpec(ActionKind(kind), amount))
    return state


@dataclass(frozen=True)
class AgentView:
    """What one seat may observe at its decision point."""

    seat: int
    hand_id: int
    spec: GameSpec
    round: str
    round_index: int
    private_cards: tuple[Card, ...]
    board: tuple[Card, ...]
    pot: int
    committed: tuple[int, int]
    remaining: tuple[int, int]
    to_act: int
    legal: LegalActions
    history: tuple[tuple[HistoryItem, ...], ...]

    @property
    def to_call(self) -> int:
        return self.legal.to_call

    @property
    def pot_total(self) -> int:
        return self.pot + self.committed[0] + self.committed[1]


def view(state: HandState, seat: int) -> AgentView:
    return AgentView(
        seat=seat,
        hand_id=state.hand_id,
        spec=state.spec,
        round=state.round,
        round_index=state.round_index,
        private_cards=state.deal.private[seat],
        board=state.board,
        pot=state.pot,
        committed=state.committed,
        remaining=state.remaining,
        to_act=state.to_act,
        legal=legal_actions(state),
        history=state.history,
    )

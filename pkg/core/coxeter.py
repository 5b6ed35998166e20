"""
Walks in FS(Cycle_n, Y) as label sequences, the four Coxeter moves, and the
constructive reduction of repetition-free anchored walks to trivial or
complete ones.

Cycle_n is labelled 1..n in cyclic order; a walk is its start permutation
plus the sequence of EdgeLabels (pairs of people) it swaps.
"""
import re
from collections import Counter
from dataclasses import dataclass, field

from core.errors import MoveError, ParameterError, ReductionInvariantError, ValidationError
from core.fs_engine import EdgeLabel
from core.graph import domination_at_least
from core.permutations import Permutation
from core.utils import make_rng
from metrics.logger import log_debug

DEFAULT_MOVE_CAP = 10**6


@dataclass(frozen=True)
class LabeledWalk:
    """Start permutation plus ordered labels."""

    start: Permutation
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(EdgeLabel.of(*lab) for lab in self.labels))

    @property
    def n(self):
        return self.start.n

    def __len__(self):
        return len(self.labels)

    def to_dict(self):
        return {"start": self.start.to_list(), "labels": [str(lab) for lab in self.labels]}


@dataclass(frozen=True)
class SquareDelete:
    index: int

    def to_dict(self):
        return {"move": "SquareDelete", "index": self.index}


@dataclass(frozen=True)
class SquareInsert:
    index: int
    label: EdgeLabel

    def to_dict(self):
        return {"move": "SquareInsert", "index": self.index, "label": str(self.label)}


@dataclass(frozen=True)
class Commute:
    index: int

    def to_dict(self):
        return {"move": "Commute", "index": self.index}


@dataclass(frozen=True)
class YangBaxter:
    index: int

    def to_dict(self):
        return {"move": "YangBaxter", "index": self.index}


@dataclass(frozen=True)
class Trim:
    """Labels cut from the front (start advances through them) and the back."""

    front: tuple = ()
    back: tuple = ()

    def to_dict(self):
        return {"move": "Trim", "front": [str(x) for x in self.front], "back": [str(x) for x in self.back]}


@dataclass
class MoveLog:
    """Ordered moves and trims, with square insertion/deletion counts per label."""

    moves: list = field(default_factory=list)
    insertions: Counter = field(default_factory=Counter)
    deletions: Counter = field(default_factory=Counter)

    def record(self, move, label=None):
        self.moves.append(move)
        if isinstance(move, SquareInsert):
            self.insertions[move.label] += 1
        elif isinstance(move, SquareDelete):
            self.deletions[label] += 1

    def satisfies_discipline(self):
        """Per label, square insertions never exceed square deletions."""
        return all(self.insertions[lab] <= self.deletions[lab] for lab in self.insertions)

    def __len__(self):
        return len(self.moves)

    def to_dict(self):
        return {
            "moves": [m.to_dict() for m in self.moves],
            "insertions": {str(k): v for k, v in sorted(self.insertions.items())},
            "deletions": {str(k): v for k, v in sorted(self.deletions.items())},
        }


@dataclass(frozen=True)
class EssentialSplit:
    """Decomposition of an anchored walk into essential prefix and suffix."""

    anchor: EdgeLabel
    xs: tuple
    ys: tuple
    cs: tuple
    prefix: tuple
    suffix: tuple


@dataclass
class ReductionResult:
    classification: str
    log: MoveLog
    walk: LabeledWalk

    def to_dict(self):
        return {
            "classification": self.classification,
            "final": self.walk.to_dict(),
            "log": self.log.to_dict(),
        }


def label_from_text(text):
    """Parse "12" (single-digit people) or "1-12" into an EdgeLabel."""
    s = text.strip()
    m = re.fullmatch(r"(\d+)-(\d+)", s)
    if m:
        return EdgeLabel.of(int(m.group(1)), int(m.group(2)))
    if re.fullmatch(r"\d\d", s):
        return EdgeLabel.of(int(s[0]), int(s[1]))
    raise ParameterError(f"cannot parse edge label '{text}' (use '12' or '1-12')")


def _cycle_adjacent(p, q, n):
    d = abs(p - q)
    return d == 1 or (n > 2 and d == n - 1)


def _execute(y, start, labels):
    """
    Run labels from start, returning the visited one-line tuples.

    Raises:
        ValidationError: naming the first non-executable step.
    """
    images = list(start.images)
    n = len(images)
    where = [0] * (n + 1)
    for pos, person in enumerate(images):
        where[person] = pos
    visited = [tuple(images)]
    for step, lab in enumerate(labels):
        u, v = lab
        pu, pv = where[u], where[v]
        if not _cycle_adjacent(pu, pv, n):
            raise ValidationError(f"step {step}: people {u} and {v} are not on adjacent cycle positions", step=step)
        if not y.has_edge(u, v):
            raise ValidationError(f"step {step}: people {u} and {v} are not adjacent in Y", step=step)
        images[pu], images[pv] = v, u
        where[u], where[v] = pv, pu
        visited.append(tuple(images))
    return visited


def validate_walk(y, w):
    """
    Confirm every step of w is a friendly swap across a Cycle_n edge.

    Returns:
        list: the visited permutations, start first.
    """
    if w.n != y.n:
        raise ParameterError(f"walk has {w.n} positions but Y has {y.n} vertices")
    return [Permutation(t) for t in _execute(y, w.start, w.labels)]


def _yang_baxter_triple(l1, l2, l3):
    people = set(l1) | set(l2) | set(l3)
    return len(people) == 3 and len({l1, l2, l3}) == 3


def _check_applicable(labels, move):
    i = move.index
    if isinstance(move, SquareInsert):
        if not 0 <= i <= len(labels):
            raise MoveError(f"square insertion index {i} outside 0..{len(labels)}", (i,), (move.label,))
        return
    span = {SquareDelete: 2, Commute: 2, YangBaxter: 3}[type(move)]
    if not 0 <= i <= len(labels) - span:
        raise MoveError(f"{type(move).__name__} at {i} runs past the walk of length {len(labels)}", (i,))
    window = labels[i:i + span]
    positions = tuple(range(i, i + span))
    if isinstance(move, SquareDelete) and window[0] != window[1]:
        raise MoveError(f"square deletion needs equal labels, got {window[0]}, {window[1]}", positions, window)
    if isinstance(move, Commute) and set(window[0]) & set(window[1]):
        raise MoveError(f"commutation needs disjoint labels, got {window[0]}, {window[1]}", positions, window)
    if isinstance(move, YangBaxter) and not _yang_baxter_triple(*window):
        raise MoveError(f"Yang-Baxter needs the pattern ab, ac, bc, got {', '.join(map(str, window))}",
                        positions, window)


def _moved_labels(labels, move):
    out = list(labels)
    i = move.index
    if isinstance(move, SquareDelete):
        del out[i:i + 2]
    elif isinstance(move, SquareInsert):
        out[i:i] = [move.label, move.label]
    elif isinstance(move, Commute):
        out[i], out[i + 1] = out[i + 1], out[i]
    else:
        out[i:i + 3] = out[i:i + 3][::-1]
    return out


def apply_move(w, move, y):
    """
    Apply one Coxeter move and confirm the result is still a walk in FS(Cycle_n, y).

    Raises:
        MoveError: when the move is not applicable at its position.
    """
    _check_applicable(w.labels, move)
    labels = _moved_labels(w.labels, move)
    try:
        _execute(y, w.start, labels)
    except ValidationError as exc:
        raise MoveError(f"{type(move).__name__} at {move.index} breaks the walk: {exc}",
                        (move.index,), tuple(labels[move.index:move.index + 3])) from exc
    return LabeledWalk(w.start, tuple(labels))


def is_repetition_free(labels):
    """Anchored (first = last) with all other labels distinct."""
    labels = list(labels)
    if len(labels) < 2 or labels[0] != labels[-1]:
        return False
    body = labels[:-1]
    return len(set(body)) == len(body)


def is_complete_pattern(labels, n):
    """ab, au_1..au_k, bu_(k+1)..bu_(n-2), ab with {a, b, u_i} = 1..n."""
    labels = list(labels)
    if len(labels) != n or labels[0] != labels[-1]:
        return False
    a, b = labels[0]
    xs, ys, cs, consumed = _split(a, b, labels[1:-1], weak=False)
    people = {a, b, *xs, *ys}
    return consumed == n - 2 and people == set(range(1, n + 1))


def _split(a, b, body, weak):
    """
    Greedy essential prefix of the span strictly between the anchors.

    Returns:
        tuple: (xs, ys, cs, number of body labels in the prefix)
    """
    used = {a, b}
    xs, ys, cs = [], [], []
    i = 0
    while i < len(body) and a in body[i]:
        other = body[i].hi if body[i].lo == a else body[i].lo
        if other in used:
            break
        xs.append(other)
        used.add(other)
        i += 1
    while i < len(body) and b in body[i]:
        other = body[i].hi if body[i].lo == b else body[i].lo
        if other in used:
            break
        ys.append(other)
        used.add(other)
        i += 1
    if weak:
        inner = set(xs) | set(ys)
        while i < len(body) and body[i].lo in inner and body[i].hi in inner:
            cs.append(body[i])
            i += 1
    return xs, ys, cs, i


def essential_prefix(w, mode="strong"):
    """
    Split an anchored walk into its strong or weak essential prefix and suffix.
    The closing anchor always belongs to the suffix.

    Raises:
        ValidationError: when w is not a repetition-free anchored walk.
    """
    labels = list(w.labels)
    if not is_repetition_free(labels):
        raise ValidationError("essential prefix needs a repetition-free anchored walk")
    if mode not in ("strong", "weak"):
        raise ParameterError(f"mode must be 'strong' or 'weak', got '{mode}'")
    a, b = labels[0]
    xs, ys, cs, consumed = _split(a, b, labels[1:-1], weak=(mode == "weak"))
    return EssentialSplit(labels[0], tuple(xs), tuple(ys), tuple(cs),
                          tuple(labels[:1 + consumed]), tuple(labels[1 + consumed:]))


def _z_profile(labels, n):
    """For each z outside the anchors, how many of az, bz occur."""
    a, b = labels[0]
    present = set(labels)
    return {z: (EdgeLabel.of(a, z) in present) + (EdgeLabel.of(b, z) in present)
            for z in range(1, n + 1) if z not in (a, b)}


def _check_hypotheses(w, y):
    if w.n != y.n:
        raise ParameterError(f"walk has {w.n} positions but Y has {y.n} vertices")
    if not is_repetition_free(w.labels):
        raise ParameterError("reduction needs a repetition-free anchored walk")
    if not domination_at_least(y, 2):
        raise ParameterError("Y must have domination number at least 2")
    return _z_profile(w.labels, w.n)


def classify_prediction(w, y):
    """
    Trivial when some z outside the anchors has both or neither of az, bz in
    the walk; Complete otherwise.
    """
    profile = _check_hypotheses(w, y)
    if any(c != 1 for c in profile.values()):
        return "Trivial"
    return "Complete"


class _Token:
    """One occurrence of a label in the working walk; identity tracks anchors."""

    __slots__ = ("label",)

    def __init__(self, label):
        self.label = label

    def __repr__(self):
        return f"<{self.label}>"


class _Reducer:
    """
    Working state of one reduction: the top-level token list, its start, the
    two top anchors and the move log. Sub-walks are addressed by their anchor
    tokens; labels moved out of a sub-walk stay in the enclosing walk, and only
    labels outside the top anchors are trimmed.
    """

    def __init__(self, walk, y, move_cap):
        self.y = y
        self.n = walk.n
        self.start = walk.start
        self.tokens = [_Token(lab) for lab in walk.labels]
        self.top = (self.tokens[0], self.tokens[-1])
        self.log = MoveLog()
        self.move_cap = move_cap

    # bookkeeping

    def fail(self, message):
        raise ReductionInvariantError(message, log=self.log)

    def pos(self, tok):
        for i, t in enumerate(self.tokens):
            if t is tok:
                return i
        self.fail(f"token {tok} vanished from the walk")

    def labels(self):
        return [t.label for t in self.tokens]

    def walk(self):
        return LabeledWalk(self.start, tuple(self.labels()))

    def span(self, first, last):
        i, j = self.pos(first), self.pos(last)
        if i >= j:
            self.fail(f"anchor {first} is not before {last}")
        return self.tokens[i + 1:j]

    def apply(self, move):
        labels = self.labels()
        try:
            _check_applicable(labels, move)
            _execute(self.y, self.start, _moved_labels(labels, move))
        except ValidationError as exc:
            self.fail(f"{type(move).__name__} at {move.index} failed: {exc}")
        i = move.index
        deleted = None
        if isinstance(move, SquareDelete):
            deleted = self.tokens[i].label
            del self.tokens[i:i + 2]
        elif isinstance(move, SquareInsert):
            pair = [_Token(move.label), _Token(move.label)]
            self.tokens[i:i] = pair
        elif isinstance(move, Commute):
            self.tokens[i], self.tokens[i + 1] = self.tokens[i + 1], self.tokens[i]
        else:
            self.tokens[i:i + 3] = self.tokens[i:i + 3][::-1]
        self.log.record(move, deleted)
        if len(self.log) > self.move_cap:
            self.fail(f"move cap of {self.move_cap} exceeded")

    def trim(self):
        first, last = self.top
        i, j = self.pos(first), self.pos(last)
        front = tuple(t.label for t in self.tokens[:i])
        back = tuple(t.label for t in self.tokens[j + 1:])
        if not front and not back:
            return
        if front:
            self.start = Permutation(_execute(self.y, self.start, front)[-1])
        self.tokens = self.tokens[i:j + 1]
        self.log.record(Trim(front, back))

    # composite moves

    def commute_left_until(self, tok, stop):
        """Commute tok leftwards until its left neighbour is stop."""
        while True:
            i = self.pos(tok)
            if i == 0:
                self.fail(f"{tok} reached the front without meeting {stop}")
            if self.tokens[i - 1] is stop:
                return
            self.apply(Commute(i - 1))

    def commute_out_left(self, tok, anchor):
        """Commute tok leftwards past anchor."""
        while True:
            i = self.pos(tok)
            self.apply(Commute(i - 1))
            if self.tokens[i] is anchor:
                return

    def commute_right_past(self, tok, anchor):
        while True:
            i = self.pos(tok)
            right = self.tokens[i + 1]
            self.apply(Commute(i))
            if right is anchor:
                return

    def insert_pair_before(self, tok, label):
        i = self.pos(tok)
        self.apply(SquareInsert(i, label))
        return self.tokens[i], self.tokens[i + 1]

    def yang_baxter_at(self, tok):
        self.apply(YangBaxter(self.pos(tok)))

    def delete_pair(self, first, second):
        i = self.pos(first)
        if i + 1 >= len(self.tokens) or self.tokens[i + 1] is not second:
            self.fail(f"anchors {first} and {second} are not adjacent after reduction")
        self.apply(SquareDelete(i))

    # structure of the current walk

    def split(self, first, last, weak):
        a, b = first.label
        body = self.span(first, last)
        xs, ys, cs, consumed = _split(a, b, [t.label for t in body], weak)
        k, l = len(xs), len(ys)
        return {
            "a": a, "b": b, "xs": xs, "ys": ys, "cs": cs,
            "x_toks": body[:k], "y_toks": body[k:k + l], "c_toks": body[k + l:consumed],
            "suffix": body[consumed:],
        }

    def _case_two(self, first, s, tok):
        """Move a label meeting exactly one anchor person to the end of its block."""
        a, b = s["a"], s["b"]
        if a in tok.label:
            stop = s["x_toks"][-1] if s["x_toks"] else first
        else:
            stop = s["y_toks"][-1] if s["y_toks"] else (s["x_toks"][-1] if s["x_toks"] else first)
        if self.tokens[self.pos(tok) - 1] is stop:
            self.fail(f"{tok.label} should already extend the essential prefix")
        self.commute_left_until(tok, stop)

    # reductions

    def reduce_avoiding(self, first, last, top=False):
        """
        Reduce the anchored sub-walk first..last to a trivial one, given some
        z outside the anchors with neither az nor bz in it. Ends with first
        and last adjacent (first may have moved right).
        """
        a, b = first.label
        if first.label != last.label:
            self.fail(f"sub-walk anchors differ: {first.label} vs {last.label}")
        labels = {t.label for t in self.span(first, last)}
        if not any(EdgeLabel.of(a, z) not in labels and EdgeLabel.of(b, z) not in labels
                   for z in range(1, self.n + 1) if z not in (a, b)):
            self.fail(f"sub-walk with anchors {first.label} has no z avoiding both anchors")
        while True:
            if top:
                self.trim()
            s = self.split(first, last, weak=False)
            if not s["suffix"]:
                if s["xs"] or s["ys"]:
                    self.fail(f"strong suffix exhausted with prefix blocks {s['xs']}, {s['ys']} left")
                return
            tok = s["suffix"][0]
            u, v = tok.label
            xs, ys = s["xs"], s["ys"]
            block = {a, b, *xs, *ys}
            if not ({u, v} & block):
                self.commute_out_left(tok, first)
            elif not ({u, v} & (set(xs) | set(ys))):
                self._case_two(first, s, tok)
            elif {u, v} & set(ys):
                self._y_block_case(first, last, s, tok)
            else:
                self._x_block_case(first, s, tok)

    def _y_block_case(self, first, last, s, tok):
        a, b = s["a"], s["b"]
        xs, ys = s["xs"], s["ys"]
        t = max(i + 1 for i, y in enumerate(ys) if y in tok.label)
        vt = ys[t - 1]
        u = tok.label.lo if tok.label.hi == vt else tok.label.hi
        y_toks, x_toks = s["y_toks"], s["x_toks"]
        if t >= 2:
            if u != ys[t - 2]:
                self.fail(f"{tok.label} after the block of {b} should pair y_{t} with y_{t - 1}")
            self.commute_left_until(tok, y_toks[t - 1])
            self.yang_baxter_at(y_toks[t - 2])
            self.commute_out_left(tok, first)
        elif not xs:
            if u != a:
                self.fail(f"{tok.label} should be the swap of {a} with {vt}")
            self.commute_left_until(tok, y_toks[0])
            self.yang_baxter_at(first)
        else:
            if u != xs[0]:
                self.fail(f"{tok.label} should be the swap of {xs[0]} with {vt}")
            self._square_detour(first, last, s, tok)

    def _square_detour(self, first, last, s, tok):
        """The x_1 y_1 case: detour through a new pair of b x_1 labels."""
        b, x1 = s["b"], s["xs"][0]
        x_toks, y_toks = s["x_toks"], s["y_toks"]
        by1 = y_toks[0]
        self.commute_left_until(tok, by1)
        # ab, ax1, by1, x1y1, ax2..axk, by2.., Q
        for xt in reversed(x_toks[1:]):
            self.commute_right_past(xt, tok)
        bx1 = EdgeLabel.of(b, x1)
        twin = next((t for t in self.span(first, last) if t.label == bx1), None)
        if twin is None:
            self.fail(f"label {bx1} missing from the walk")
        _, inner = self.insert_pair_before(by1, bx1)
        self.yang_baxter_at(first)          # bx1, ax1, ab
        self.yang_baxter_at(inner)          # x1y1, by1, bx1
        self.apply(Commute(self.pos(first)))  # ab past x1y1
        for xt in x_toks[1:]:
            self.commute_left_until(xt, first if xt is x_toks[1] else x_toks[x_toks.index(xt) - 1])
        self.reduce_avoiding(inner, twin)
        self.delete_pair(inner, twin)

    def _x_block_case(self, first, s, tok):
        a, b = s["a"], s["b"]
        xs, ys = s["xs"], s["ys"]
        x_toks = s["x_toks"]
        sidx = max(i + 1 for i, x in enumerate(xs) if x in tok.label)
        vs = xs[sidx - 1]
        u = tok.label.lo if tok.label.hi == vs else tok.label.hi
        if sidx >= 2:
            if u != xs[sidx - 2]:
                self.fail(f"{tok.label} after the block of {a} should pair x_{sidx} with x_{sidx - 1}")
            self.commute_left_until(tok, x_toks[sidx - 1])
            self.yang_baxter_at(x_toks[sidx - 2])
            self.commute_out_left(tok, first)
        elif not ys:
            if u != b:
                self.fail(f"{tok.label} should be the swap of {b} with {vs}")
            self.commute_left_until(tok, x_toks[0])
            self.yang_baxter_at(first)
        else:
            self.fail(f"{tok.label} meets x_1 while the block of {b} is nonempty")

    def migrate(self, first, last, p, q, p_toks, trigger):
        """
        Reduce a walk whose weak suffix begins with q u, u met by p in the
        block of p right after the first anchor.

        Every z then meets the anchors an even number of times, so p is friends
        with everyone; reduce_anchored refuses such Y before getting here.
        """
        u = trigger.label.lo if trigger.label.hi == q else trigger.label.hi
        us = [t.label.lo if t.label.hi == p else t.label.hi for t in p_toks]
        i = us.index(u)
        pu = p_toks[i]
        twins = []
        for j in range(i - 1, -1, -1):
            xj_u = EdgeLabel.of(us[j], u)
            outer, inner = self.insert_pair_before(p_toks[j], xj_u)
            self.yang_baxter_at(inner)      # x_j u, p u, p x_j, x_j u
            self.commute_out_left(outer, first)
            twins.append(inner)
        for inner in twins:
            original = next((t for t in self.span(inner, last) if t.label == inner.label), None)
            if original is None:
                self.fail(f"label {inner.label} missing after its inserted copy")
            self.reduce_avoiding(inner, original)
            self.delete_pair(inner, original)
        if self.tokens[self.pos(first) + 1] is not pu:
            self.fail(f"{pu.label} did not reach the first anchor")
        outer, inner = self.insert_pair_before(first, trigger.label)
        self.yang_baxter_at(inner)          # q u, p u, p q, q u
        self.reduce_avoiding(inner, trigger)
        self.delete_pair(inner, trigger)
        self.reduce_avoiding(first, last, top=True)

    def reduce_complete_or_both(self):
        first, last = self.top
        while True:
            self.trim()
            s = self.split(first, last, weak=True)
            a, b = s["a"], s["b"]
            xs, ys = s["xs"], s["ys"]
            if not s["suffix"]:
                for ct in reversed(s["c_toks"]):
                    self.commute_right_past(ct, last)
                self.trim()
                return
            tok = s["suffix"][0]
            u, v = tok.label
            if xs and b in tok.label and (set(tok.label) - {b}) <= set(xs):
                self.migrate(first, last, a, b, s["x_toks"], tok)
                return "Trivial"
            if ys and a in tok.label and (set(tok.label) - {a}) <= set(ys):
                for yt in s["y_toks"]:
                    stop = first if yt is s["y_toks"][0] else s["y_toks"][s["y_toks"].index(yt) - 1]
                    self.commute_left_until(yt, stop)
                self.migrate(first, last, b, a, s["y_toks"], tok)
                return "Trivial"
            block = {a, b, *xs, *ys}
            if not ({u, v} & block):
                self.commute_out_left(tok, first)
            elif not ({u, v} & (set(xs) | set(ys))):
                self._case_two(first, s, tok)
            else:
                self.fail(f"{tok.label} meets the essential blocks outside every reducible case")


def reduce_anchored(w, y, move_cap=DEFAULT_MOVE_CAP):
    """
    Reduce a repetition-free anchored walk in FS(Cycle_n, y) by Coxeter moves.

    Returns:
        ReductionResult: classification (Trivial or Complete), the move log
        and the final anchored walk.

    Raises:
        ParameterError: when the walk or y violates the hypotheses.
        ReductionInvariantError: when the case analysis meets an excluded
            state, carrying the log so far.
    """
    validate_walk(y, w)
    profile = _check_hypotheses(w, y)
    red = _Reducer(w, y, move_cap)
    first, last = red.top
    if 0 in profile.values():
        red.reduce_avoiding(first, last, top=True)
        red.trim()
        outcome = "Trivial"
    else:
        outcome = red.reduce_complete_or_both() or "Complete"
        red.trim()
    final = red.walk()
    if outcome == "Trivial" and len(final) != 2:
        red.fail(f"reduction ended with {len(final)} labels instead of a trivial walk")
    if outcome == "Complete" and not is_complete_pattern(final.labels, final.n):
        red.fail("reduction ended without a complete anchored walk")
    if not red.log.satisfies_discipline():
        red.fail("square insertions outnumber deletions for some label")
    log_debug(f"reduced walk of {len(w)} labels in {len(red.log)} moves: {outcome}")
    return ReductionResult(outcome, red.log, final)


def replay(w, log, y):
    """
    Re-apply a move log to w, validating every intermediate walk.

    Returns:
        LabeledWalk: the walk after the last move.
    """
    moves = log.moves if isinstance(log, MoveLog) else log
    cur = w
    for step, move in enumerate(moves):
        if isinstance(move, Trim):
            labels = list(cur.labels)
            nf, nb = len(move.front), len(move.back)
            if tuple(labels[:nf]) != tuple(move.front) or (nb and tuple(labels[-nb:]) != tuple(move.back)):
                raise ValidationError(f"trim at step {step} does not match the walk", step=step)
            start = Permutation(_execute(y, cur.start, labels[:nf])[-1])
            cur = LabeledWalk(start, tuple(labels[nf:len(labels) - nb]))
        else:
            cur = apply_move(cur, move, y)
    return cur


def find_anchored_walks(y, n, budget, seed=None, restart=None):
    """
    Seeded random walks in FS(Cycle_n, y), yielding each distinct
    repetition-free anchored factor (up to budget of them).
    """
    if n != y.n:
        raise ParameterError(f"n={n} but Y has {y.n} vertices")
    if not domination_at_least(y, 2):
        raise ParameterError("Y must have domination number at least 2")
    if budget <= 0:
        return
    rng = make_rng(seed)
    restart = restart or 6 * n
    cycle_edges = [(i, i % n + 1) for i in range(1, n + 1)] if n > 2 else [(1, 2)]
    seen = set()
    steps = 0
    while steps < 200 * budget:
        images = [int(v) + 1 for v in rng.permutation(n)]
        path = [tuple(images)]
        labels = []
        last_occ = {}
        for _ in range(restart):
            steps += 1
            options = []
            for p, q in cycle_edges:
                u, v = images[p - 1], images[q - 1]
                if y.has_edge(u, v):
                    options.append((p, q, EdgeLabel.of(u, v)))
            if labels:
                options = [o for o in options if o[2] != labels[-1]] or options
            if not options:
                break
            p, q, lab = options[int(rng.integers(len(options)))]
            images[p - 1], images[q - 1] = images[q - 1], images[p - 1]
            j = len(labels)
            labels.append(lab)
            path.append(tuple(images))
            i = last_occ.get(lab)
            last_occ[lab] = j
            if i is None:
                continue
            factor = tuple(labels[i:j + 1])
            if len(set(factor[:-1])) != len(factor) - 1:
                continue
            key = (path[i], factor)
            if key in seen:
                continue
            seen.add(key)
            yield LabeledWalk(Permutation(path[i]), factor)
            if len(seen) >= budget:
                return

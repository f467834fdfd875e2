"""Factor analysis for the sequences in this package.

Every function here works on a finite snapshot: a generator is materialized
to its prefix of length `horizon`, a Word or plain string is taken as-is.
Results therefore certify only what the snapshot shows; horizons should be
generous relative to the factor lengths involved (return-word scans want the
horizon to exceed the last used occurrence plus twice the largest gap seen).

Exponents and counts are exact (ints and Fractions); numpy is used only for
boolean mismatch masks and integer window sums.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .golden import GoldenNumber, fib, tau_pow
from .words import (
    FIBONACCI_MORPHISM,
    SequenceGenerator,
    Word,
    discolour_letter,
)

Source = SequenceGenerator | Word | Sequence[str] | str


def _materialize(source: Source, horizon: int | None) -> list[str]:
    if isinstance(source, SequenceGenerator):
        if horizon is None:
            raise ValueError("horizon is required when analysing a generator")
        return source.letters(horizon)
    if isinstance(source, Word):
        letters = list(source)
    elif isinstance(source, str):
        letters = list(source)
    else:
        letters = list(source)
    return letters if horizon is None else letters[:horizon]


class _Snapshot:
    """Letters plus a single-character encoding for C-speed substring scans."""

    __slots__ = ("letters", "text", "codes", "tokens")

    def __init__(self, letters: list[str]) -> None:
        self.letters = letters
        codes: dict[str, str] = {}
        for tok in letters:
            if tok not in codes:
                codes[tok] = chr(0x21 + len(codes))
        self.codes = codes
        self.tokens = {v: k for k, v in codes.items()}
        self.text = "".join([codes[tok] for tok in letters])

    def encode(self, word: Word) -> str | None:
        try:
            return "".join([self.codes[tok] for tok in word])
        except KeyError:
            return None  # contains a letter the snapshot never shows

    def decode(self, text: str) -> Word:
        return Word(self.tokens[ch] for ch in text)


@dataclass(frozen=True)
class OccurrenceList:
    factor: Word
    positions: tuple[int, ...]
    horizon: int


@dataclass(frozen=True)
class ReturnWordSet:
    """Distinct return words in order of first appearance.

    When `factor` is a prefix of the sequence the first entry is the return
    word that starts at position 0. `complete` is a heuristic: it is set when
    no new return word appeared in the second half of the horizon.
    """

    factor: Word
    returns: tuple[Word, ...]
    complete: bool


@dataclass(frozen=True)
class RepetitionRecord:
    """A fractional power: factor of length exponent*period with that period."""

    root: Word
    exponent: Fraction
    position: int

    @property
    def period(self) -> int:
        return len(self.root)

    @property
    def length(self) -> int:
        total = self.exponent * self.period
        return int(total)


@dataclass(frozen=True)
class BalanceWitness:
    window: int
    letter: str
    low_position: int
    low_count: int
    high_position: int
    high_count: int


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    witness: BalanceWitness | None
    horizon: int
    max_window: int


@dataclass(frozen=True)
class FibonacciBispecial:
    """Closed-form bispecial data for the Fibonacci word at level n.

    `word` is the n-th bispecial factor (a palindromic prefix), and the two
    return words are given with the prefix one first. Lengths follow
    |word| = F_{n+3} - 2, |prefix_return| = F_{n+2}, |other_return| = F_{n+1}.
    """

    index: int
    word: Word
    prefix_return: Word
    other_return: Word


def occurrences(factor: Word, source: Source, horizon: int | None = None) -> OccurrenceList:
    """All start positions of `factor` inside the snapshot."""
    if len(factor) == 0:
        raise ValueError("factor must be nonempty")
    snap = _Snapshot(_materialize(source, horizon))
    pattern = snap.encode(factor)
    positions: list[int] = []
    if pattern is not None:
        pos = snap.text.find(pattern)
        while pos != -1:
            positions.append(pos)
            pos = snap.text.find(pattern, pos + 1)
    return OccurrenceList(factor, tuple(positions), len(snap.letters))


def return_words(factor: Word, source: Source, horizon: int | None = None) -> ReturnWordSet:
    """Distinct words separating consecutive occurrences of `factor`."""
    occ = occurrences(factor, source, horizon)
    if len(occ.positions) < 2:
        raise ValueError(
            f"factor {factor.to_text()!r} occurs {len(occ.positions)} time(s) "
            "in the snapshot; need at least 2 to observe a return word"
        )
    letters = _materialize(source, horizon)
    seen: dict[tuple[str, ...], int] = {}
    order: list[Word] = []
    for start, end in zip(occ.positions, occ.positions[1:]):
        gap = tuple(letters[start:end])
        if gap not in seen:
            seen[gap] = end
            order.append(Word(gap))
    half = occ.horizon // 2
    complete = all(first_end <= half for first_end in seen.values())
    return ReturnWordSet(factor, tuple(order), complete)


def _extension_sets(text: str, pattern: str) -> tuple[set[str], set[str]]:
    """Left/right extension letters of pattern; stops early once both are >= 2."""
    lefts: set[str] = set()
    rights: set[str] = set()
    n = len(text)
    plen = len(pattern)
    pos = text.find(pattern)
    while pos != -1:
        if pos > 0:
            lefts.add(text[pos - 1])
        end = pos + plen
        if end < n:
            rights.add(text[end])
        if len(lefts) >= 2 and len(rights) >= 2:
            break
        pos = text.find(pattern, pos + 1)
    return lefts, rights


def bispecial_factors(source: Source, horizon: int | None = None, max_len: int = 30) -> list[Word]:
    """Factors of length <= max_len with >= 2 left and >= 2 right extensions.

    Works length by length: a right-special factor's suffixes are right
    special too, so candidates of length L+1 are single-letter extensions of
    the right-special frontier at length L. The empty word is included when
    the snapshot shows at least two letters.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    snap = _Snapshot(_materialize(source, horizon))
    text = snap.text
    alphabet = sorted(set(text))
    found: list[Word] = []
    frontier: list[str] = [""] if len(alphabet) >= 2 else []
    if frontier and len(text) >= 2:
        found.append(Word())
    for _ in range(max_len):
        nxt: list[str] = []
        for stem in frontier:
            for c in alphabet:
                cand = c + stem
                lefts, rights = _extension_sets(text, cand)
                if len(rights) >= 2:
                    nxt.append(cand)
                    if len(lefts) >= 2:
                        found.append(snap.decode(cand))
        frontier = nxt
        if not frontier:
            break
    found.sort(key=lambda w: (len(w), w.to_text()))
    return found


_FIB_BISPECIAL_CACHE: list[FibonacciBispecial] = []
_FIB_BISPECIAL_MAX = 32  # word lengths grow as Fibonacci numbers


def fibonacci_bispecial(n: int) -> FibonacciBispecial:
    """Closed-form bispecial factor of the Fibonacci word with both returns.

    Built by the recurrences word' = phi(word) + "a", returns' = phi(returns)
    from (empty, "a", "b"). Everything stays in memory, hence the index cap.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    if n > _FIB_BISPECIAL_MAX:
        raise ValueError(f"index {n} exceeds the in-memory cap {_FIB_BISPECIAL_MAX}")
    if not _FIB_BISPECIAL_CACHE:
        _FIB_BISPECIAL_CACHE.append(
            FibonacciBispecial(0, Word(), Word.from_text("a"), Word.from_text("b"))
        )
    a = Word.from_text("a")
    while len(_FIB_BISPECIAL_CACHE) <= n:
        prev = _FIB_BISPECIAL_CACHE[-1]
        _FIB_BISPECIAL_CACHE.append(
            FibonacciBispecial(
                prev.index + 1,
                FIBONACCI_MORPHISM(prev.word) + a,
                FIBONACCI_MORPHISM(prev.prefix_return),
                FIBONACCI_MORPHISM(prev.other_return),
            )
        )
    return _FIB_BISPECIAL_CACHE[n]


def is_balanced(
    source: Source,
    horizon: int | None = None,
    max_window: int = 200,
) -> BalanceReport:
    """Sliding-window balance check.

    For every window length L <= max_window and every letter, the counts of
    that letter over all length-L windows of the snapshot may spread by at
    most 1. On failure the witness names the window length, the letter and
    two window positions realising the spread. max_window is clipped to the
    snapshot length.
    """
    letters = _materialize(source, horizon)
    n = len(letters)
    if n == 0:
        raise ValueError("empty snapshot")
    max_window = min(max_window, n)
    alphabet = sorted(set(letters))
    arr = np.array([alphabet.index(tok) for tok in letters], dtype=np.int16)
    prefix_sums = {
        tok: np.concatenate(([0], np.cumsum(arr == k, dtype=np.int64)))
        for k, tok in enumerate(alphabet)
    }
    for window in range(1, max_window + 1):
        for tok in alphabet:
            sums = prefix_sums[tok]
            counts = sums[window:] - sums[:-window]
            low = int(counts.min())
            high = int(counts.max())
            if high - low > 1:
                return BalanceReport(
                    balanced=False,
                    witness=BalanceWitness(
                        window=window,
                        letter=tok,
                        low_position=int(np.argmin(counts)),
                        low_count=low,
                        high_position=int(np.argmax(counts)),
                        high_count=high,
                    ),
                    horizon=n,
                    max_window=max_window,
                )
    return BalanceReport(balanced=True, witness=None, horizon=n, max_window=max_window)


def derived_sequence(factor: Word, source: Source, horizon: int | None = None) -> Word:
    """Recode the snapshot as its walk through the return words of `factor`.

    `factor` must be a prefix of the sequence. Return words are numbered by
    first appearance ("1", "2", ...), and the output covers every complete
    return word the horizon certifies.
    """
    letters = _materialize(source, horizon)
    if list(factor) != letters[: len(factor)]:
        raise ValueError(f"factor {factor.to_text()!r} is not a prefix of the sequence")
    occ = occurrences(factor, letters)
    if len(occ.positions) < 2:
        raise ValueError("need at least 2 occurrences to derive")
    names: dict[tuple[str, ...], str] = {}
    out: list[str] = []
    for start, end in zip(occ.positions, occ.positions[1:]):
        gap = tuple(letters[start:end])
        if gap not in names:
            names[gap] = str(len(names) + 1)
        out.append(names[gap])
    return Word(out)


def parikh_is_fib_factor(k: int, ell: int) -> bool:
    """Whether (k, ell) is the Parikh vector of some factor of the Fibonacci
    word: true exactly when |k - tau*ell| < tau^2, decided in exact golden
    arithmetic.
    """
    if k < 0 or ell < 0:
        raise ValueError("counts must be >= 0")
    g = GoldenNumber(k, -ell)
    bound = tau_pow(2)
    return (bound - g).sign() > 0 and (bound + g).sign() > 0


def max_fractional_power(
    source: Source,
    horizon: int | None = None,
    min_period: int = 1,
    max_period: int | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> RepetitionRecord:
    """Highest fractional power with period in [min_period, max_period].

    For each period p the snapshot is compared against its shift by p; a
    maximal run of r agreements starting at position i witnesses the factor
    snapshot[i : i+r+p] of period p and exponent (r+p)/p. Exponents are exact
    Fractions; ties go to the smaller period, then the smaller position. The
    witness is re-verified letter by letter before it is returned.
    """
    letters = _materialize(source, horizon)
    n = len(letters)
    if max_period is None:
        max_period = max(n // 2, 1)
    if not 1 <= min_period <= max_period <= n - 1:
        raise ValueError(
            f"need 1 <= min_period <= max_period <= {n - 1}, "
            f"got [{min_period}, {max_period}] at horizon {n}"
        )
    vocab: dict[str, int] = {}
    for tok in letters:
        vocab.setdefault(tok, len(vocab))
    arr = np.array([vocab[tok] for tok in letters], dtype=np.int16)

    best_exp = Fraction(0)
    best_period = min_period
    best_pos = 0
    best_run = 0
    total = max_period - min_period + 1
    step = max(1, total // 20)
    for i, p in enumerate(range(min_period, max_period + 1)):
        if progress is not None and i % step == 0:
            progress(i, total)
        eq = arr[p:] == arr[:-p]
        mismatches = np.flatnonzero(~eq)
        if mismatches.size == 0:
            run, pos = eq.size, 0
        else:
            runs = np.empty(mismatches.size + 1, dtype=np.int64)
            runs[0] = mismatches[0]
            runs[1:-1] = np.diff(mismatches) - 1
            runs[-1] = eq.size - mismatches[-1] - 1
            starts = np.empty(mismatches.size + 1, dtype=np.int64)
            starts[0] = 0
            starts[1:] = mismatches + 1
            k = int(np.argmax(runs))  # first maximum: earliest position
            run, pos = int(runs[k]), int(starts[k])
        exponent = Fraction(run + p, p)
        if exponent > best_exp:
            best_exp, best_period, best_pos, best_run = exponent, p, pos, run
    if progress is not None:
        progress(total, total)

    i, p, r = best_pos, best_period, best_run
    if letters[i + p : i + p + r] != letters[i : i + r]:
        raise ArithmeticError("repetition witness failed re-verification")
    return RepetitionRecord(
        root=Word(letters[i : i + p]),
        exponent=best_exp,
        position=i,
    )


def sufficiently_coloured(word: Word, period_length: int) -> bool:
    """True when the discoloured word has at least period_length of each of
    a and b; the divisibility law for return words applies from there on.
    """
    plain = sum(1 for tok in word if discolour_letter(tok) == "a")
    hatted = len(word) - plain
    return plain >= period_length and hatted >= period_length


def fibonacci_bispecial_lengths(max_len: int) -> dict[int, int]:
    """Map length -> level for the bispecial lengths F_{n+3} - 2 up to max_len."""
    table: dict[int, int] = {}
    n = 0
    while fib(n + 3) - 2 <= max_len:
        table[fib(n + 3) - 2] = n
        n += 1
    return table

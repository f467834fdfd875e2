import time
from fractions import Fraction

import numpy as np

from seqlab.analysis import (
    bispecial_factors,
    derived_sequence,
    fibonacci_bispecial,
    fibonacci_bispecial_lengths,
    is_balanced,
    max_fractional_power,
    parikh_is_fib_factor,
    return_words,
    sufficiently_coloured,
)
from seqlab.cli import main as cli_main
from seqlab.exponents import (
    coefficient_lower_bounds,
    colouring_exponent_bound,
    empirical_asymptotic_estimate,
    fibonacci_asymptotic_estimate,
    split_letter,
)
from seqlab.golden import ONE, TAU, GoldenNumber, fib, tau_pow
from seqlab.words import Word, colouring, discolour_letter, fibonacci_sequence

CENT = Fraction(5, 100)
NANO = Fraction(1, 10**9)


def test_criterion_01_threshold_table(acceptance, capsys):
    start = time.perf_counter()
    code = cli_main(["table"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    rows = out.strip().splitlines()[1:]
    bounds = [row.split()[3] for row in rows]
    markers = [row.split()[5] for row in rows]
    want_bounds = ["3.618034", "1.809017", "1.250000", "1.047746", "1.014755"]
    want_markers = ["=", "=", "<", "=", "<"]

    problems = []
    if code != 0:
        problems.append(f"exit code {code}")
    if elapsed >= 1.0:
        problems.append(f"runtime {elapsed:.2f}s")
    if markers != want_markers:
        problems.append(f"markers {markers}")
    mismatched = [
        (d, got, want)
        for d, got, want in zip((2, 4, 6, 8, 10), bounds, want_bounds)
        if got != want
    ]
    for d, got, want in mismatched:
        exact = colouring_exponent_bound(d // 2).bound
        problems.append(
            f"d={d} prints {got} (exact value {exact} = "
            f"{exact.decimal(10)}), required {want}"
        )
    detail = (
        f"bounds {bounds}, markers {','.join(markers)}, {elapsed:.2f}s"
        if not problems
        else "; ".join(problems)
    )
    acceptance(1, not problems, detail)


def test_criterion_02_exact_bound_identities(acceptance):
    expected = {
        1: TAU + 2,
        2: ONE + TAU * Fraction(1, 2),
        3: GoldenNumber(Fraction(5, 4)),
        4: ONE + (tau_pow(2) * 8).inverse(),
        5: ONE + (tau_pow(3) * 16).inverse(),
    }
    mismatched = [
        delta
        for delta, want in expected.items()
        if colouring_exponent_bound(delta).bound != want
    ]
    canonical = [str(colouring_exponent_bound(d).bound) for d in range(1, 6)]
    acceptance(
        2,
        not mismatched,
        f"exact coefficient equality for delta=1..5: {canonical}"
        if not mismatched
        else f"coefficient mismatch at delta {mismatched}",
    )


def test_criterion_03_membership_oracle(acceptance):
    start = time.perf_counter()
    horizon, ceiling = 10**4, 60
    text = "".join(fibonacci_sequence().letters(horizon))
    flags = np.frombuffer(text.encode("ascii"), dtype=np.uint8) == ord("a")
    sums = np.concatenate([[0], np.cumsum(flags, dtype=np.int64)])
    observed = {}
    for length in range(1, 2 * ceiling + 1):
        observed[length] = set(np.unique(sums[length:] - sums[:-length]).tolist())
    mismatches = [
        (k, ell)
        for k in range(ceiling + 1)
        for ell in range(ceiling + 1)
        if k + ell >= 1
        and parikh_is_fib_factor(k, ell) != (k in observed[k + ell])
    ]
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 10
    acceptance(
        3,
        ok,
        f"3720 pairs vs prefix({horizon}) enumeration, "
        f"{len(mismatches)} mismatches, {elapsed:.2f}s",
    )


def test_criterion_04_coefficient_certificates(acceptance):
    start = time.perf_counter()
    bad = []
    for n in range(1, 11):
        cert = coefficient_lower_bounds(n)
        if not (cert.passed and cert.kappa_min == fib(n + 1)
                and cert.lambda_min == fib(n)):
            bad.append(n)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 5
    acceptance(
        4,
        ok,
        f"n=1..10 enumerated to the closed-form limits, "
        f"violations at {bad or 'none'}, {elapsed:.2f}s",
    )


def test_criterion_05_return_word_cross_check(acceptance):
    start = time.perf_counter()
    snap = fibonacci_sequence().letters(10**5)
    text = "".join(snap)
    bad = []
    for n in range(1, 16):
        fb = fibonacci_bispecial(n)
        rws = return_words(fb.word, snap)
        expected = (fb.prefix_return, fb.other_return)
        if rws.returns != expected or any(
            got.parikh() != want.parikh()
            for got, want in zip(rws.returns, expected)
        ):
            bad.append(f"level {n}")
    two_returns = True
    checked = 0
    for length in range(1, 51):
        for factor in {text[i:i + length] for i in range(len(text) - length + 1)}:
            checked += 1
            if len(return_words(Word(factor), snap).returns) != 2:
                two_returns = False
                bad.append(f"factor {factor!r}")
    elapsed = time.perf_counter() - start
    ok = not bad and two_returns and elapsed < 30
    acceptance(
        5,
        ok,
        f"levels 1..15 match closed forms, {checked} factors of length <= 50 "
        f"all have two returns, {elapsed:.1f}s"
        if ok
        else f"failures: {bad[:3]}, {elapsed:.1f}s",
    )


def test_criterion_06_divisibility(acceptance):
    lengths = fibonacci_bispecial_lengths(250)
    horizon = 2 * 10**5
    violations = []
    counts = []
    for delta in (2, 3, 4):
        period = 2 ** (delta - 1)
        snap = colouring(delta).letters(horizon)
        coloured = [
            w
            for w in bispecial_factors(snap, horizon, 250)
            if sufficiently_coloured(w, period)
        ]
        n_returns = 0
        for w in coloured:
            if len(w) not in lengths:
                violations.append(f"delta={delta} length {len(w)}")
            for v in return_words(w, snap).returns:
                n_returns += 1
                plain = sum(1 for t in v if discolour_letter(t) == "a")
                if plain % period or (len(v) - plain) % period:
                    violations.append(f"delta={delta} counts "
                                      f"({plain},{len(v) - plain})")
        counts.append(f"delta={delta}: {len(coloured)} bispecials, "
                      f"{n_returns} returns")
    acceptance(
        6,
        not violations,
        "; ".join(counts) if not violations else f"violations: {violations[:3]}",
    )


def test_criterion_07_convergence(acceptance):
    ratio_estimate = fibonacci_asymptotic_estimate(30).estimate
    gap = TAU + 2 - ratio_estimate
    ratio_ok = gap.sign() > 0 and (gap - Fraction(1, 10**5)).sign() < 0

    record = max_fractional_power(fibonacci_sequence(), 10**5, 100, 2000)
    scan_gap = abs(record.exponent - Fraction(3618034, 10**6))
    scan_ok = scan_gap <= CENT
    acceptance(
        7,
        ratio_ok and scan_ok,
        f"ratio estimate at level 30 within 1e-5 of 2+tau (gap "
        f"{gap.decimal(8)}), "
        f"scan found {record.exponent} = {float(record.exponent):.6f} "
        f"(period {record.period})",
    )


def test_criterion_08_estimates_respect_bounds(acceptance):
    start = time.perf_counter()
    min_periods = {1: 100, 2: 100, 3: 500, 4: 500}
    problems = []
    found = []
    for delta in (1, 2, 3, 4):
        bound = colouring_exponent_bound(delta).bound
        estimate = empirical_asymptotic_estimate(
            delta, 10**6, min_periods[delta]
        ).estimate
        if (bound + NANO - estimate).sign() <= 0:
            problems.append(f"delta={delta} estimate {estimate} above bound")
        if delta in (1, 2) and ((bound - estimate) - CENT).sign() >= 0:
            problems.append(f"delta={delta} estimate {float(estimate):.6f} "
                            f"not within 0.05 of the bound")
        found.append(f"delta={delta}: {float(estimate):.6f} <= "
                     f"{bound.decimal()}")
    elapsed = time.perf_counter() - start
    if elapsed >= 300:
        problems.append(f"runtime {elapsed:.0f}s")
    acceptance(
        8,
        not problems,
        ("; ".join(found) + f", {elapsed:.0f}s")
        if not problems
        else "; ".join(problems),
    )


def test_criterion_09_split_letter(acceptance):
    base = colouring(2)
    split = split_letter(base, "2")
    alphabet = set(split.letters(10**4))
    report = is_balanced(split, 10**4, max_window=200)
    base_exp = max_fractional_power(base, 10**4, 100).exponent
    split_exp = max_fractional_power(split, 10**4, 100).exponent
    ok = (
        len(alphabet) == 5
        and report.balanced
        and split_exp <= base_exp + NANO
    )
    acceptance(
        9,
        ok,
        f"5-letter split balanced, exponent {float(split_exp):.6f} <= "
        f"{float(base_exp):.6f} of the source",
    )


def test_criterion_10_balancedness(acceptance):
    unbalanced = []
    for delta in (1, 2, 3, 4):
        if not is_balanced(colouring(delta), 10**4, max_window=200).balanced:
            unbalanced.append(delta)
    witness_report = is_balanced("aabb")
    witness_ok = (
        not witness_report.balanced
        and witness_report.witness is not None
        and witness_report.witness.window == 2
    )
    acceptance(
        10,
        not unbalanced and witness_ok,
        "colourings delta=1..4 balanced at horizon 10^4 window 200; "
        "aabb rejected with a window-2 witness",
    )


def test_criterion_11_derived_self_similarity(acceptance):
    target = ["1" if t == "a" else "2"
              for t in fibonacci_sequence().letters(100)]
    bad = []
    for n in range(1, 11):
        fb = fibonacci_bispecial(n)
        horizon = 100 * fib(n + 2) + len(fb.word) + fib(n + 3)
        derived = derived_sequence(fb.word, fibonacci_sequence(), horizon)
        if list(derived.letters()[:100]) != target:
            bad.append(n)
    acceptance(
        11,
        not bad,
        "derived sequences at levels 1..10 reproduce the base word "
        "on their first 100 letters"
        if not bad
        else f"mismatch at levels {bad}",
    )

"""
Batch command line front end.

Every capability is exposed as a subcommand with deterministic output:
tabular data honours ``--format csv|tsv``, approximate numbers carry a
``~`` prefix (six decimal places), and ``--exact`` appends the isolating
interval with exact rational endpoints.  Exit codes: 0 on success, 1 on
domain errors (one-line reason on stderr), 2 on usage errors.

Arguments that name a basis, generator list, matrix, or rectangle set
accept ``@path`` to read the same content from a file.
"""
from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from fractions import Fraction
from functools import reduce
from itertools import product
from pathlib import Path
from typing import Sequence

from .classes import (
    av,
    avoids,
    enumerate_class,
    is_antichain,
    normalize_basis,
    sum_closure_counts,
    sum_indecomposables_in,
)
from .classify import (
    decide_sub_kappa,
    family_poly,
    family_value,
    list_subkappa_rates,
)
from .encodings import (
    HOOK_MATRIX,
    PARALLEL_MATRIX,
    count_language,
    decode_31,
    decode_hook,
    decode_parallel,
    encode_31,
    encode_hook,
    encode_parallel,
    three_one_language,
    word_weight,
)
from .genfun import (
    KAPPA_POLY,
    ONE,
    X,
    algebraic_compare,
    algebraic_equal,
    format_poly,
    kappa,
    largest_positive_root,
    nu,
    parse_poly,
    pringsheim_growth,
    rational_gf,
    series,
)
from .grid import (
    Gridding,
    av_cell,
    enumerate_gridded,
    find_gridding,
    graph_of_matrix,
    grid_member,
    grid_members,
    is_D_griddable,
    is_forest,
    parse_matrix,
)
from .perm import (
    SYMMETRY_NAMES,
    all_perms,
    contains,
    direct_sum,
    format_perm,
    inflate,
    is_simple,
    parse_perm,
    perm_graph,
    simple_decomposition,
    skew_decomposition,
    skew_sum,
    sum_decomposition,
    symmetry,
)
from .rectangles import (
    all_sliced,
    independence_number,
    rect,
    slice_rectangles,
    slicing_bound,
)
from .witnesses import (
    OSC_CLOSURE_BASIS,
    alternation,
    basis_WO,
    in_WO,
    increasing_oscillating_prefix,
    increasing_oscillations,
    is_parallel_alternation,
    u_antichain,
)

# Command-line spellings mapped to the generator family names.
WITNESS_FAMILIES = {
    "par-alt": "parallel",
    "wedge-alt": "wedge",
    "31-alt": "three_one",
    "linear-triple": "linear_triple",
    "hook-triple": "hook_triple",
    "u-antichain": "u_antichain",
    "osc-inc": None,
    "osc-dec": None,
}


# ---------------------------------------------------------------- helpers

def _usage(message: str) -> int:
    print(f"usage error: {message}", file=sys.stderr)
    return 2


def _row(args: argparse.Namespace, *cells: object) -> None:
    sep = "\t" if args.format == "tsv" else ","
    print(sep.join(str(c) for c in cells))


def _algebraic(args: argparse.Namespace, value) -> str:
    refined = value.refine(Fraction(1, 10**8))
    text = "~" + refined.approx_str(6)
    if args.exact:
        text += f" [{refined.lo}..{refined.hi}]"
    return text


def _split_items(text: str) -> list[str]:
    # @path reads one item per line with # comments; inline lists split on
    # semicolons, or on commas when no semicolon appears
    if text.startswith("@"):
        lines = Path(text[1:]).read_text().splitlines()
        stripped = (ln.split("#", 1)[0].strip() for ln in lines)
        return [s for s in stripped if s]
    chunk = text.replace(";", "\n")
    if ";" not in text:
        chunk = chunk.replace(",", "\n")
    return [piece.strip() for piece in chunk.splitlines() if piece.strip()]


def _load_perms(text: str):
    return [parse_perm(item) for item in _split_items(text)]


def _load_basis(text: str):
    return normalize_basis(_load_perms(text))


def _load_matrix(text: str):
    if text.startswith("@"):
        return parse_matrix(Path(text[1:]).read_text())
    return parse_matrix(text.replace(";", "\n"))


def _load_rects(items: Sequence[str]):
    if len(items) == 1 and items[0].startswith("@"):
        items = _split_items(items[0])
    out = []
    for item in items:
        parts = item.replace(",", " ").split()
        if len(parts) != 4:
            raise ValueError(f"rectangle needs 4 coordinates, got {item!r}")
        out.append(rect(*(Fraction(p) for p in parts)))
    return out


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.replace(",", " ").split())


def _deadline(args: argparse.Namespace) -> float | None:
    budget = getattr(args, "budget", None)
    return None if budget is None else time.monotonic() + budget


def _expired(deadline: float | None) -> bool:
    return deadline is not None and time.monotonic() > deadline


def _maybe_selftest(args: argparse.Namespace) -> int | None:
    if getattr(args, "selftest", False):
        return _run_selftest(args.group)
    return None


# ------------------------------------------------------------ perm group

def _cmd_perm_contains(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.pattern is None or args.target is None:
        return _usage("perm contains needs PATTERN and TARGET")
    hit = contains(parse_perm(args.pattern), parse_perm(args.target))
    print("true" if hit else "false")
    return 0


def _cmd_perm_simple(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.perm is None:
        return _usage("perm simple needs a permutation")
    print("true" if is_simple(parse_perm(args.perm)) else "false")
    return 0


def _cmd_perm_decompose(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.perm is None:
        return _usage("perm decompose needs a permutation")
    p = parse_perm(args.perm)
    if not p:
        raise ValueError("the empty permutation has no decomposition")
    print("sum: " + " + ".join(format_perm(c) for c in sum_decomposition(p)))
    print("skew: " + " + ".join(format_perm(c) for c in skew_decomposition(p)))
    dec = simple_decomposition(p)
    print("skeleton: " + format_perm(dec.skeleton))
    print("blocks: " + " + ".join(format_perm(c) for c in dec.components))
    return 0


def _cmd_perm_graph(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.perm is None:
        return _usage("perm graph needs a permutation")
    g = perm_graph(parse_perm(args.perm))
    print(f"vertices: {g.vertex_count}")
    print(("edges: " + " ".join(f"{i}-{j}" for i, j in sorted(g.edges))).rstrip())
    return 0


def _cmd_perm_symmetry(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.perm is None:
        return _usage("perm symmetry needs a permutation")
    p = parse_perm(args.perm)
    if args.which is None:
        for name in SYMMETRY_NAMES:
            print(f"{name}: {format_perm(symmetry(p, name))}")
    else:
        print(format_perm(symmetry(p, args.which)))
    return 0


# ----------------------------------------------------------- class group

def _class_layers(cls, args: argparse.Namespace, with_root: bool) -> int:
    # level-by-level so a wall-clock budget can stop between lengths
    if cls.is_all:
        raise ValueError("refusing to enumerate the class of all permutations")
    deadline = _deadline(args)
    layer = [()] if avoids((), cls) else []
    _row(args, 0, len(layer))
    for n in range(1, args.max_n + 1):
        if _expired(deadline):
            _row(args, "incomplete", n)
            break
        nxt = []
        for q in layer:
            for slot in range(n):
                cand = q[:slot] + (n,) + q[slot:]
                if avoids(cand, cls):
                    nxt.append(cand)
        layer = nxt
        if with_root:
            _row(args, n, len(layer), "~%.6f" % (len(layer) ** (1.0 / n)))
        else:
            _row(args, n, len(layer))
    return 0


def _cmd_class_enumerate(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.basis is None:
        return _usage("class enumerate needs a basis")
    return _class_layers(_load_basis(args.basis), args, with_root=False)


def _cmd_class_growth(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.basis is None:
        return _usage("class growth needs a basis")
    return _class_layers(_load_basis(args.basis), args, with_root=True)


def _cmd_class_closure(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.gens is None:
        return _usage("class closure needs generators")
    counts = sum_closure_counts(_load_perms(args.gens), args.max_n)
    deadline = _deadline(args)
    for n, c in enumerate(counts):
        if n > 0 and _expired(deadline):
            _row(args, "incomplete", n)
            break
        _row(args, n, c)
    return 0


def _cmd_class_indecomposables(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.basis is None:
        return _usage("class indecomposables needs a basis")
    counts = sum_indecomposables_in(_load_basis(args.basis), args.max_n)
    for n, c in enumerate(counts):
        _row(args, n, c)
    return 0


def _cmd_class_antichain(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if not args.perms:
        return _usage("class antichain needs at least one permutation")
    perms = [parse_perm(text) for text in args.perms]
    print("true" if is_antichain(perms) else "false")
    return 0


# -------------------------------------------------------------- gf group

def _cmd_gf_series(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.num is None:
        return _usage("gf series needs --num")
    gf = rational_gf(parse_poly(args.num), parse_poly(args.den))
    for n, c in enumerate(series(gf, args.max_n)):
        _row(args, n, c)
    return 0


def _cmd_gf_sumclosure(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.num is None:
        return _usage("gf sumclosure needs --num")
    f = rational_gf(parse_poly(args.num), parse_poly(args.den))
    closed = rational_gf(f.den, f.den - f.num)
    print(f"gf: {closed}")
    if args.max_n is not None:
        for n, c in enumerate(series(closed, args.max_n)):
            _row(args, n, c)
    return 0


def _cmd_gf_growth(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.num is None:
        return _usage("gf growth needs --num")
    gf = rational_gf(parse_poly(args.num), parse_poly(args.den))
    print(_algebraic(args, pringsheim_growth(gf)))
    return 0


def _cmd_gf_root(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.poly is None:
        return _usage("gf root needs a polynomial")
    print(_algebraic(args, largest_positive_root(parse_poly(args.poly))))
    return 0


# ------------------------------------------------------------ grid group

def _cmd_grid_gridding(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.perm is None or args.matrix is None:
        return _usage("grid gridding needs PERM and MATRIX")
    g = find_gridding(parse_perm(args.perm), _load_matrix(args.matrix))
    if g is None:
        print("none")
    else:
        print("cols: " + " ".join(str(c) for c in g.cols))
        print("rows: " + " ".join(str(r) for r in g.rows))
    return 0


def _cmd_grid_enumerate(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.matrix is None:
        return _usage("grid enumerate needs a matrix")
    m = _load_matrix(args.matrix)
    deadline = _deadline(args)
    for n in range(args.max_n + 1):
        if n > 0 and _expired(deadline):
            _row(args, "incomplete", n)
            break
        if args.distinct:
            count = len(grid_members(m, n)[n])
        else:
            count = enumerate_gridded(m, n)[n]
        _row(args, n, count)
    return 0


def _cmd_grid_graph(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.matrix is None:
        return _usage("grid graph needs a matrix")
    g = graph_of_matrix(_load_matrix(args.matrix))
    print(("vertices: " + " ".join(f"{c},{r}" for c, r in g.vertices)).rstrip())
    edges = " ".join(f"{a},{b}-{c},{d}" for (a, b), (c, d) in sorted(g.edges))
    print(("edges: " + edges).rstrip())
    return 0


def _cmd_grid_forest(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.matrix is None:
        return _usage("grid forest needs a matrix")
    print("true" if is_forest(_load_matrix(args.matrix)) else "false")
    return 0


def _cmd_grid_griddable(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.basis is None:
        return _usage("grid griddable needs a class basis")
    cls = _load_basis(args.basis)
    cell_perms = basis_WO() if args.cells is None else _load_basis(args.cells).basis
    report = is_D_griddable(cls, cell_perms)
    print("true" if report else "false")
    if not report:
        escape = f"{format_perm(report.witness)} ({report.direction} closure escapes)"
        print(f"witness: {escape}")
    return 0


# ---------------------------------------------------------- encode group

_CODECS = {
    "par": (encode_parallel, decode_parallel),
    "hook": (encode_hook, decode_hook),
    "31": (encode_31, decode_31),
}


def _cmd_encode(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    encoder, decoder = _CODECS[args.codec]
    wants_encode = args.perm is not None or args.cols is not None or args.rows is not None
    if args.word is not None and wants_encode:
        return _usage("give a word to decode, or --perm/--cols/--rows to encode, not both")
    if args.word is not None:
        p, g = decoder(args.word)
        print(("perm: " + format_perm(p)).rstrip())
        print("cols: " + " ".join(str(c) for c in g.cols))
        print("rows: " + " ".join(str(r) for r in g.rows))
        return 0
    if args.perm is None or args.cols is None or args.rows is None:
        return _usage("encoding needs --perm, --cols and --rows together")
    gridding = Gridding(_ints(args.cols), _ints(args.rows))
    print(encoder(parse_perm(args.perm), gridding))
    return 0


# -------------------------------------------------------- witness group

def _cmd_witness(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.family is None or args.m is None:
        return _usage("witness needs FAMILY and M")
    if args.family == "osc-inc":
        p = symmetry(increasing_oscillating_prefix(args.m), args.sym)
    elif args.family == "osc-dec":
        base = symmetry(increasing_oscillating_prefix(args.m), "reverse")
        p = symmetry(base, args.sym)
    else:
        p = alternation(WITNESS_FAMILIES[args.family], args.m, args.sym)
    print(" ".join(str(v) for v in p))
    return 0


# ------------------------------------------------------- families group

def _cmd_families_list(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    entries = list_subkappa_rates(args.max_k, args.max_l)
    _row(args, "family", "k", "l", "polynomial", "value", "value-interval")
    for e in entries:
        refined = e.value.refine(Fraction(1, 10**8))
        _row(
            args,
            e.family,
            "" if e.k is None else e.k,
            "" if e.ell is None else e.ell,
            format_poly(e.poly),
            "~" + refined.approx_str(6),
            f"[{refined.lo}..{refined.hi}]",
        )
    return 0


def _cmd_decide_kappa(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if args.basis is None:
        return _usage("decide-kappa needs a basis")
    verdict = decide_sub_kappa(_load_basis(args.basis))
    print(verdict.verdict)
    if verdict.witness is not None:
        condition, detail = verdict.witness
        print(f"witness: {condition}: {detail}")
    else:
        for item in verdict.passed:
            print(f"passed: {item}")
    return 0


# ------------------------------------------------------------ rect group

def _cmd_rect_slice(args: argparse.Namespace) -> int:
    code = _maybe_selftest(args)
    if code is not None:
        return code
    if not args.rects:
        return _usage("rect slice needs rectangles as x1,x2,y1,y2 or @file")
    rects = _load_rects(args.rects)
    for line in sorted(slice_rectangles(rects)):
        print(f"{line.orientation} {line.coordinate}")
    return 0


# -------------------------------------------------------------- selftest

def _selftest_perm() -> list[tuple[str, bool]]:
    pool = [p for n in range(1, 6) for p in all_perms(n)]
    composite = [p for n in range(2, 6) for p in all_perms(n)]
    small = [p for n in range(5) for p in all_perms(n)]
    involutions = ("reverse", "complement", "inverse", "rotate180", "antidiagonal")
    return [
        ("sum decomposition rebuilds", all(
            reduce(direct_sum, sum_decomposition(p)) == p for p in pool)),
        ("skew decomposition rebuilds", all(
            reduce(skew_sum, skew_decomposition(p)) == p for p in pool)),
        ("substitution decomposition rebuilds", all(
            inflate(d.skeleton, d.components) == p
            for p in composite for d in (simple_decomposition(p),))),
        ("symmetry involutions", all(
            symmetry(symmetry(p, s), s) == p for p in small for s in involutions)),
        ("quarter turns invert each other", all(
            symmetry(symmetry(p, "rotate90"), "rotate270") == p for p in small)),
        ("containment is reflexive", all(contains(p, p) for p in small)),
    ]


def _selftest_class() -> list[tuple[str, bool]]:
    return [
        ("Av(321) counts are Catalan", enumerate_class(av("321"), 7)[0]
         == [1, 1, 2, 5, 14, 42, 132, 429]),
        ("Av(12,21) dies at length 2", enumerate_class(av("12", "21"), 4)[0]
         == [1, 1, 0, 0, 0]),
        ("closure of 1 is the increasing class", sum_closure_counts([(1,)], 6)
         == [1] * 7),
        ("closure of 1432 matches its block recurrence",
         sum_closure_counts([(1, 4, 3, 2)], 8) == [1, 1, 2, 4, 7, 13, 24, 44, 81]),
        ("antichain test separates", is_antichain([(1, 2), (2, 1)])
         and not is_antichain([(1,), (1, 2)])),
    ]


def _selftest_gf() -> list[tuple[str, bool]]:
    fib = rational_gf(ONE, parse_poly("1-x-x^2"))
    return [
        ("Fibonacci series", series(fib, 9) == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]),
        ("Fibonacci growth is the golden ratio", algebraic_equal(
            pringsheim_growth(fib), largest_positive_root(parse_poly("x^2-x-1")))),
        ("kappa bracket", 2.2055 < float(kappa()) < 2.2056),
        ("nu bracket", 2.0659 < float(nu()) < 2.0660),
        ("nu lies below kappa", algebraic_compare(nu(), kappa()) < 0),
    ]


def _selftest_grid() -> list[tuple[str, bool]]:
    column = parse_matrix("inc\ninc")
    report = is_D_griddable(av_cell("123"), [(1, 2), (2, 1)])
    return [
        ("single increasing cell", enumerate_gridded(parse_matrix("inc"), 6)
         == [1] * 7),
        ("stacked increasing cells double", enumerate_gridded(column, 8)
         == [2**n for n in range(9)]),
        ("membership separates", grid_member((1, 4, 2, 5, 3, 6), column)
         and not grid_member((4, 3, 2, 1), column)),
        ("one row of two cells is a forest", is_forest(parse_matrix("inc, inc"))),
        ("the full 2x2 square is not", not is_forest(
            parse_matrix("inc, inc\ninc, inc"))),
        ("griddability reports the escaping closure",
         not report and report.witness == (1, 2) and report.direction == "skew"),
    ]


def _selftest_encode() -> list[tuple[str, bool]]:
    par_ok = True
    for n in range(7):
        words = ["".join(w) for w in product("lr", repeat=n)]
        par_ok = par_ok and all(
            encode_parallel(*decode_parallel(w)) == w for w in words)
        par_ok = par_ok and len(words) == enumerate_gridded(PARALLEL_MATRIX, n)[n]
    hook_ok = True
    for n in range(7):
        words = ["".join(w) for w in product("hrt", repeat=n) if "rt" not in "".join(w)]
        hook_ok = hook_ok and all(encode_hook(*decode_hook(w)) == w for w in words)
        hook_ok = hook_ok and len(words) == enumerate_gridded(HOOK_MATRIX, n)[n]
    lang = three_one_language()
    all_words = ["".join(w) for k in range(7) for w in product("lLr", repeat=k)]
    light = [w for w in all_words if word_weight(lang, w) <= 6]
    by_weight = Counter(word_weight(lang, w) for w in light)
    return [
        ("parallel words biject with gridded members", par_ok),
        ("hook words biject with gridded members", hook_ok),
        ("weighted words round-trip", all(
            encode_31(*decode_31(w)) == w for w in light)),
        ("weighted counts follow the transfer matrix",
         [by_weight.get(i, 0) for i in range(7)] == count_language(lang, 6)),
    ]


def _selftest_witness() -> list[tuple[str, bool]]:
    return [
        ("antichain members are incomparable", is_antichain(
            [u_antichain(m) for m in range(1, 5)])),
        ("parallel alternations are simple", all(
            is_simple(alternation("parallel", m)) for m in range(2, 6))),
        ("the recognizer accepts them", all(
            is_parallel_alternation(alternation("parallel", m)) for m in range(2, 6))),
        ("the identity is no parallel alternation",
         not is_parallel_alternation((1, 2, 3, 4))),
        ("wedge basis elements are simple outsiders", all(
            is_simple(b) and not in_WO(b) for b in basis_WO())),
        ("oscillations lie in their closure class", all(
            avoids(p, OSC_CLOSURE_BASIS)
            for k in range(3, 9) for p in increasing_oscillations(k))),
    ]


def _selftest_classify() -> list[tuple[str, bool]]:
    rates = list_subkappa_rates(3, 3)
    two = family_value("II")
    above = [e for e in rates if algebraic_compare(e.value, two) > 0]
    return [
        ("catalogue strictly sorted", all(
            algebraic_compare(a.value, b.value) < 0
            for a, b in zip(rates, rates[1:]))),
        ("first rate above two is nu", bool(above)
         and (above[0].family, above[0].k, above[0].ell) == ("V", 1, 1)
         and algebraic_equal(above[0].value, nu())),
        ("family VI shifts the kappa polynomial",
         family_poly("VI", 2) == ONE - X**2 * KAPPA_POLY),
        ("threshold verdicts",
         decide_sub_kappa(av("21")).verdict == "lt-kappa"
         and decide_sub_kappa(av("321", "2341", "3412", "4123")).witness[0]
         == "contains all increasing oscillations"
         and decide_sub_kappa(av("123")).verdict == "ge-kappa"),
    ]


def _selftest_rect() -> list[tuple[str, bool]]:
    rects = [
        rect(0, 2, 0, 2),
        rect(1, 3, 1, 3),
        rect(4, 6, 0, 1),
        rect(Fraction(1, 2), Fraction(3, 2), 4, 5),
    ]
    lines = slice_rectangles(rects)
    return [
        ("every rectangle sliced", all_sliced(rects, lines)),
        ("line count under the recursion bound",
         len(lines) <= slicing_bound(independence_number(rects))),
        ("nested rectangles are dependent", independence_number(
            [rect(0, 4, 0, 4), rect(1, 2, 1, 2)]) == 1),
    ]


_SELFTESTS = {
    "perm": _selftest_perm,
    "class": _selftest_class,
    "gf": _selftest_gf,
    "grid": _selftest_grid,
    "encode": _selftest_encode,
    "witness": _selftest_witness,
    "classify": _selftest_classify,
    "rect": _selftest_rect,
}


def _run_selftest(group: str) -> int:
    checks = _SELFTESTS[group]()
    failed = [name for name, ok in checks if not ok]
    print(f"selftest {group}: {len(checks) - len(failed)} passed, {len(failed)} failed")
    for name in failed:
        print(f"failed: {name}")
    return 1 if failed else 0


# ---------------------------------------------------------------- parser

def _leaf(sub, name: str, handler, group: str, help_text: str):
    p = sub.add_parser(name, help=help_text, description=help_text)
    p.set_defaults(func=handler, group=group)
    p.add_argument("--format", choices=("csv", "tsv"), default="csv",
                   help="delimiter for tabular output")
    p.add_argument("--exact", action="store_true",
                   help="append exact rational intervals to approximate numbers")
    p.add_argument("--selftest", action="store_true",
                   help="run this module's small-n invariant checks and exit")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permclass",
        description="Permutation classes, growth rates and the threshold at kappa.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    perm = top.add_parser("perm", help="single-permutation operations")
    psub = perm.add_subparsers(dest="subcommand", required=True)
    p = _leaf(psub, "contains", _cmd_perm_contains, "perm",
              "test whether PATTERN embeds in TARGET")
    p.add_argument("pattern", nargs="?")
    p.add_argument("target", nargs="?")
    p = _leaf(psub, "simple", _cmd_perm_simple, "perm",
              "test whether a permutation is simple")
    p.add_argument("perm", nargs="?")
    p = _leaf(psub, "decompose", _cmd_perm_decompose, "perm",
              "sum, skew and substitution decompositions")
    p.add_argument("perm", nargs="?")
    p = _leaf(psub, "graph", _cmd_perm_graph, "perm",
              "inversion graph as a vertex count and edge list")
    p.add_argument("perm", nargs="?")
    p = _leaf(psub, "symmetry", _cmd_perm_symmetry, "perm",
              "apply one named symmetry, or list all eight")
    p.add_argument("perm", nargs="?")
    p.add_argument("which", nargs="?", choices=SYMMETRY_NAMES)

    cls = top.add_parser("class", help="avoidance-class operations")
    csub = cls.add_subparsers(dest="subcommand", required=True)
    p = _leaf(csub, "enumerate", _cmd_class_enumerate, "class",
              "count members of Av(BASIS) by length")
    p.add_argument("basis", nargs="?")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--budget", type=float, default=None,
                   help="wall-clock seconds before aborting with partial rows")
    p = _leaf(csub, "growth", _cmd_class_growth, "class",
              "counts with their n-th roots as an empirical growth table")
    p.add_argument("basis", nargs="?")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--budget", type=float, default=None)
    p = _leaf(csub, "closure", _cmd_class_closure, "class",
              "count the sum closure generated by a permutation list")
    p.add_argument("gens", nargs="?")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--budget", type=float, default=None)
    p = _leaf(csub, "indecomposables", _cmd_class_indecomposables, "class",
              "count the sum-indecomposable members of Av(BASIS) by length")
    p.add_argument("basis", nargs="?")
    p.add_argument("--max-n", type=int, default=8)
    p = _leaf(csub, "antichain", _cmd_class_antichain, "class",
              "test whether the given permutations are pairwise incomparable")
    p.add_argument("perms", nargs="*")

    gf = top.add_parser("gf", help="rational generating functions")
    gsub = gf.add_subparsers(dest="subcommand", required=True)
    p = _leaf(gsub, "series", _cmd_gf_series, "gf",
              "expand NUM/DEN as a power series")
    p.add_argument("--num")
    p.add_argument("--den", default="1")
    p.add_argument("--max-n", type=int, default=10)
    p = _leaf(gsub, "sumclosure", _cmd_gf_sumclosure, "gf",
              "turn a block generating function f into 1/(1-f)")
    p.add_argument("--num")
    p.add_argument("--den", default="1")
    p.add_argument("--max-n", type=int, default=None)
    p = _leaf(gsub, "growth", _cmd_gf_growth, "gf",
              "exponential growth rate of the coefficients of NUM/DEN")
    p.add_argument("--num")
    p.add_argument("--den", default="1")
    p = _leaf(gsub, "root", _cmd_gf_root, "gf",
              "largest positive real root of a polynomial")
    p.add_argument("poly", nargs="?")

    grid = top.add_parser("grid", help="grid classes and griddability")
    rsub = grid.add_subparsers(dest="subcommand", required=True)
    p = _leaf(rsub, "gridding", _cmd_grid_gridding, "grid",
              "find division lines placing PERM into MATRIX")
    p.add_argument("perm", nargs="?")
    p.add_argument("matrix", nargs="?")
    p = _leaf(rsub, "enumerate", _cmd_grid_enumerate, "grid",
              "count gridded permutations of MATRIX by length")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--distinct", action="store_true",
                   help="count distinct underlying permutations instead")
    p.add_argument("--budget", type=float, default=None)
    p = _leaf(rsub, "graph", _cmd_grid_graph, "grid",
              "cell graph: nonempty cells, adjacent along rows and columns")
    p.add_argument("matrix", nargs="?")
    p = _leaf(rsub, "forest", _cmd_grid_forest, "grid",
              "test whether the cell graph is acyclic")
    p.add_argument("matrix", nargs="?")
    p = _leaf(rsub, "griddable", _cmd_grid_griddable, "grid",
              "test whether Av(BASIS) is griddable with the given cell class")
    p.add_argument("basis", nargs="?")
    p.add_argument("cells", nargs="?",
                   help="basis of the cell class; wedge oscillation basis when absent")

    enc = top.add_parser("encode", help="letter encodings of gridded permutations")
    esub = enc.add_subparsers(dest="subcommand", required=True)
    for codec, text in (
        ("par", "two stacked increasing cells over {l, r}"),
        ("hook", "hook matrix over {h, r, t} words avoiding the factor rt"),
        ("31", "sum closure beside an increasing cell over weighted {l, L, r}"),
    ):
        p = _leaf(esub, codec, _cmd_encode, "encode", f"encoding for {text}")
        p.set_defaults(codec=codec)
        p.add_argument("word", nargs="?", help="word to decode")
        p.add_argument("--perm", help="permutation to encode")
        p.add_argument("--cols", help="column division, e.g. 1,4,6")
        p.add_argument("--rows", help="row division, e.g. 1,4,6")

    p = _leaf(top, "witness", _cmd_witness, "witness",
              "emit the m-th member of a named witness family")
    p.add_argument("family", nargs="?", choices=tuple(WITNESS_FAMILIES))
    p.add_argument("m", nargs="?", type=int)
    p.add_argument("--sym", choices=SYMMETRY_NAMES, default="id")

    fam = top.add_parser("families", help="the catalogue of small growth rates")
    fsub = fam.add_subparsers(dest="subcommand", required=True)
    p = _leaf(fsub, "list", _cmd_families_list, "classify",
              "tabulate the growth rates below kappa with certified intervals")
    p.add_argument("--max-k", type=int, default=6)
    p.add_argument("--max-l", type=int, default=6)
    p.add_argument("--bound", choices=("kappa",), default="kappa")

    p = _leaf(top, "decide-kappa", _cmd_decide_kappa, "classify",
              "decide whether Av(BASIS) grows below kappa")
    p.add_argument("basis", nargs="?")

    rc = top.add_parser("rect", help="axis-parallel rectangle slicing")
    rcsub = rc.add_subparsers(dest="subcommand", required=True)
    p = _leaf(rcsub, "slice", _cmd_rect_slice, "rect",
              "emit lines slicing every rectangle")
    p.add_argument("rects", nargs="*", help="rectangles as x1,x2,y1,y2 or @file")

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

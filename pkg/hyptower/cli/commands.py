# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Sub-commands of the ``hyptower`` command line.

Exit status is 0 on success, 1 when a verification fails or a candidate is malformed, and 2 on usage and parse
errors.
"""
from __future__ import annotations

import argparse
import asyncio
import logging
import os
import sys
from collections.abc import Awaitable, Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import Literal, NamedTuple, TypeVar

from hyptower import Config
from hyptower.catalog import get_entry, list_entries, run_entries
from hyptower.catalog.free_products import zs_presentation
from hyptower.checks import CheckResult
from hyptower.errors import (
    DocumentParseError,
    InvalidStructureError,
    MalformedCandidateError,
    UnknownEntryError,
    UnsupportedModelError,
)
from hyptower.gog import induced_presentation
from hyptower.groups import FreeModel, GroupModel, Presentation, free_product_normal_form, model_for
from hyptower.surfaces import (
    SurfaceDatum,
    enumerate_floor_profiles,
    enumerate_subsurfaces,
    euler_from_presentation_data,
    is_floor_admissible,
    standard_presentation,
)
from hyptower.towers import Verdict, VerificationReport, step_limit_from_config
from hyptower.whitehead import is_basis, is_primitive, minimize, total_cyclic_length
from hyptower.words import Alphabet, Word, is_genus_one_commutator, parse_word

from .document import InputDocument, parse
from .output import Output


__all__ = (
    "EXIT_OK",
    "EXIT_FAILURE",
    "EXIT_USAGE",
    "CandidateOutcome",
    "builtin_group",
    "build_parser",
    "verify_document",
    "run_coroutine",
    "run",
)

logger = logging.getLogger("hyptower.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

T = TypeVar("T")
CandidateKind = Literal["floors", "towers"]


def builtin_group(name: str) -> Presentation:
    """``S4``, ``S2``, ``ZS``, ``Z`` or ``F<n>``.

    Raises
    ------
    DocumentParseError
        For any other name.
    """
    if name == "S4":
        return standard_presentation(SurfaceDatum.closed_nonorientable(4)).presentation
    if name == "S2":
        return standard_presentation(SurfaceDatum.closed_orientable(2)).presentation
    if name == "ZS":
        return zs_presentation()
    if name == "Z":
        return Presentation(["z"])
    if name.startswith("F") and name[1:].isdigit():
        return Presentation.free(Alphabet.free_basis(int(name[1:])))
    raise DocumentParseError(f"unknown group {name!r}, expected S4, S2, ZS, Z, F<n> or a presentation of --in")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise DocumentParseError(f"cannot read {path}: {exc.strerror}") from None


def _document(args: argparse.Namespace) -> tuple[InputDocument, str]:
    if not args.input:
        raise DocumentParseError(f"{args.command} needs an input document, pass --in FILE")
    text = _read(args.input)
    return parse(text), text


def _group(args: argparse.Namespace) -> Presentation | None:
    name = getattr(args, "group", None)
    if name is None:
        return None
    if args.input:
        document, _ = _document(args)
        if name in document.data["presentations"]:
            return document.presentation(name)
    return builtin_group(name)


def _words(texts: Sequence[str], alphabet: Alphabet | None = None) -> list[Word]:
    """Parse words over one alphabet, the union of their letters in order of appearance when none is given."""
    if alphabet is None:
        names: list[str] = []
        for text in texts:
            names.extend(name for name in parse_word(text).alphabet if name not in names)
        alphabet = Alphabet(names)
    return [parse_word(text, alphabet) for text in texts]


def _model(args: argparse.Namespace, texts: Sequence[str]) -> tuple[GroupModel, list[Word]]:
    group = _group(args)
    if group is None:
        words = _words(texts)
        return FreeModel(words[0].alphabet if words else ()), words
    return model_for(group, step_limit_from_config()), _words(texts, group.alphabet)


def _word(args: argparse.Namespace, output: Output) -> int:
    texts = [args.word] + list(getattr(args, "other", []) or [])
    given = " ; ".join(texts)
    if args.action == "commutator-test":
        (word,) = _words(texts)
        witness = is_genus_one_commutator(word)
        output.result(
            args.action, given, {"commutator": witness is not None, "witness": str(witness) if witness else None}
        )
        return EXIT_OK
    model, words = _model(args, texts)
    if args.action == "reduce":
        output.result(args.action, given, str(words[0]))
    elif args.action == "is-trivial":
        output.result(args.action, given, model.is_trivial(words[0]))
    elif args.action == "equal":
        output.result(args.action, given, model.are_equal(words[0], words[1]))
    else:
        syllables = free_product_normal_form(words[0], model)
        output.result(args.action, given, [f"{syllable.factor}: {syllable.word}" for syllable in syllables])
    return EXIT_OK


def _classify(args: argparse.Namespace, output: Output) -> int:
    surface = SurfaceDatum.parse(args.surface)
    output.result(
        "classify",
        args.surface,
        {
            "name": surface.name,
            "orientable": surface.orientable,
            "euler_characteristic": surface.euler_char,
            "boundary_components": surface.boundary_count,
            "genus": surface.genus,
            "crosscaps": surface.crosscaps,
            "floor_admissible": None if surface.is_closed else is_floor_admissible(surface),
        },
    )
    return EXIT_OK


def _presentation(args: argparse.Namespace, output: Output) -> int:
    if args.action == "standard":
        standard = standard_presentation(SurfaceDatum.parse(args.surface), args.prefix)
        output.result(
            "standard",
            args.surface,
            {
                "presentation": str(standard.presentation),
                "boundary_words": ", ".join(map(str, standard.boundary_words)) or None,
            },
        )
    elif args.action == "euler":
        value = euler_from_presentation_data(args.kind == "orientable", args.count, args.boundary)
        output.result("euler", f"{args.kind} {args.count} {args.boundary}", value)
    else:
        document, _ = _document(args)
        if args.decomposition not in document.data["decompositions"]:
            raise DocumentParseError(f"no decomposition named {args.decomposition!r}")
        presentation = induced_presentation(document.decomposition(args.decomposition))
        if args.simplify:
            presentation = presentation.simplify()
        output.result("induced", args.decomposition, str(presentation))
    return EXIT_OK


def _profiles(args: argparse.Namespace, output: Output) -> int:
    surface = SurfaceDatum.parse(args.surface)
    if surface.is_closed:
        bound = args.piece_bound or int(Config["verification"]["piece_bound"])
        profiles = enumerate_floor_profiles(surface, bound)
        if args.accepted_only:
            profiles = [profile for profile in profiles if profile.accepted]
        output.result("profiles", args.surface, [str(profile) for profile in profiles])
    else:
        output.result("subsurfaces", args.surface, [piece.name for piece in enumerate_subsurfaces(surface)])
    return EXIT_OK


def _whitehead(args: argparse.Namespace, output: Output) -> int:
    alphabet = Alphabet(args.generators.split(",")) if args.generators else None
    words = _words(args.words, alphabet)
    rank = alphabet or (words[0].alphabet if words else Alphabet(()))
    given = " ; ".join(args.words)
    if args.action == "minimize":
        minimized, moves = minimize(words, rank)
        output.result(
            "minimize",
            given,
            {
                "minimized": " ; ".join(map(str, minimized)),
                "total_length": total_cyclic_length(minimized),
                "moves": len(moves),
            },
        )
    elif args.action == "is-primitive":
        output.result("is-primitive", given, is_primitive(words[0], rank))
    else:
        output.result("is-basis", given, is_basis(words, rank))
    return EXIT_OK


class CandidateOutcome(NamedTuple):
    """What a worker sends back: a report, or the exit status and message of an error."""

    name: str
    report: VerificationReport | None
    status: int = EXIT_OK
    error: str = ""


def _structure_report(name: str, kind: CandidateKind, exc: InvalidStructureError) -> VerificationReport:
    checks = [
        CheckResult(f"structure: {check.name}", check.clause, check.status, check.detail)
        for check in exc.report.all_checks
    ]
    return VerificationReport(name, Verdict.NOT_A_FLOOR if kind == "floors" else Verdict.NOT_A_TOWER, checks)


def _verify_candidate(text: str, kind: CandidateKind, name: str, samples: int, seed: int | None) -> CandidateOutcome:
    """Parse the document and verify one candidate; runs in worker processes."""
    try:
        document = parse(text)
        candidate = document.floor(name) if kind == "floors" else document.tower(name)
        return CandidateOutcome(name, candidate.verify(samples=samples, seed=seed))
    except InvalidStructureError as exc:
        return CandidateOutcome(name, _structure_report(name, kind, exc))
    except DocumentParseError as exc:
        return CandidateOutcome(name, None, EXIT_USAGE, str(exc))
    except (MalformedCandidateError, UnsupportedModelError) as exc:
        return CandidateOutcome(name, None, EXIT_FAILURE, str(exc))


async def verify_document(
    text: str,
    kind: CandidateKind,
    names: Sequence[str],
    *,
    jobs: int = 1,
    samples: int = 0,
    seed: int | None = None,
) -> list[CandidateOutcome]:
    """Verify the named candidates of a document, in worker processes when ``jobs > 1``, sorted by name."""
    ordered = sorted(set(names))
    if jobs <= 1 or len(ordered) <= 1:
        return [_verify_candidate(text, kind, name, samples, seed) for name in ordered]
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        outcomes = await asyncio.gather(
            *(loop.run_in_executor(pool, _verify_candidate, text, kind, name, samples, seed) for name in ordered)
        )
    return sorted(outcomes, key=lambda outcome: outcome.name)


def run_coroutine(coroutine: Awaitable[T]) -> T:
    """Run a coroutine on uvloop when it is enabled and available, else on the default event loop."""
    if Config["cli"]["uvloop"] and os.name != "nt":
        try:
            import uvloop
        except ImportError:  # pragma: no cover
            pass
        else:
            return uvloop.run(coroutine)  # type: ignore[arg-type]
    return asyncio.run(coroutine)  # type: ignore[arg-type]


def _samples(args: argparse.Namespace) -> int:
    if args.samples is not None:
        return args.samples
    return int(Config["verification"]["retraction_samples"]) if args.seed is not None else 0


def _verify(args: argparse.Namespace, output: Output) -> int:
    kind: CandidateKind = "floors" if args.command == "verify-floor" else "towers"
    document, text = _document(args)
    declared = document.floors if kind == "floors" else document.towers
    names = args.names or list(declared)
    missing = [name for name in names if name not in declared]
    if missing:
        raise DocumentParseError(f"no {kind} named {', '.join(missing)}")
    if not names:
        raise DocumentParseError(f"the document declares no {kind}")
    outcomes = run_coroutine(
        verify_document(text, kind, names, jobs=args.jobs, samples=_samples(args), seed=args.seed)
    )
    status = EXIT_OK
    reports = []
    for outcome in outcomes:
        if outcome.report is None:
            logger.error("%s: %s", outcome.name, outcome.error)
            status = max(status, outcome.status)
            continue
        reports.append(outcome.report)
        if not outcome.report.accepted:
            status = max(status, EXIT_FAILURE)
    output.reports(reports)
    return status


def _catalog(args: argparse.Namespace, output: Output) -> int:
    if args.action == "list":
        output.result(
            "catalog list",
            "",
            [f"{entry.name} ({entry.expected.value}): {entry.description}" for entry in list_entries()],
        )
        return EXIT_OK
    if not args.all and not args.names:
        raise DocumentParseError("catalog run needs entry names or --all")
    names = [entry.name for entry in list_entries()] if args.all else args.names
    for name in names:
        get_entry(name)
    summary = run_coroutine(run_entries(names, jobs=args.jobs, samples=_samples(args), seed=args.seed))
    output.catalog(summary)
    return EXIT_OK if summary.failed == 0 else EXIT_FAILURE


def _common() -> argparse.ArgumentParser:
    section = Config["cli"]
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", metavar="FILE", help="input document, TOML or JSON; - for stdin")
    common.add_argument("--format", choices=("text", "records"), default=section["format"], help="output format")
    common.add_argument("--jobs", type=int, default=int(section["jobs"]), help="worker processes")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    common.add_argument(
        "--samples",
        type=int,
        default=None,
        help="random words checked against r . i = id; the configured count when only --seed is given",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of every sub-command."""
    common = _common()
    parser = argparse.ArgumentParser(prog="hyptower", description="Verify hyperbolic floors and towers.")
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser("classify", parents=[common], help="name and classify a surface")
    classify.add_argument("surface", help="surface(orientable|nonorientable, chi, boundary)")
    classify.set_defaults(handler=_classify)

    word = commands.add_parser("word", help="word problem queries")
    actions = word.add_subparsers(dest="action", required=True)
    for action, extra in (
        ("reduce", False),
        ("is-trivial", False),
        ("equal", True),
        ("commutator-test", False),
        ("normal-form", False),
    ):
        sub = actions.add_parser(action, parents=[common])
        sub.add_argument("word")
        if extra:
            sub.add_argument("other", nargs=1)
        if action != "commutator-test":
            sub.add_argument("--group", help="S4, S2, ZS, Z, F<n> or a presentation of --in; free if omitted")
        sub.set_defaults(handler=_word)

    presentation = commands.add_parser("presentation", help="surface and induced presentations")
    actions = presentation.add_subparsers(dest="action", required=True)
    standard = actions.add_parser("standard", parents=[common])
    standard.add_argument("surface")
    standard.add_argument("--prefix", default="")
    euler = actions.add_parser("euler", parents=[common])
    euler.add_argument("kind", choices=("orientable", "nonorientable"))
    euler.add_argument("count", type=int, help="handles or crosscaps")
    euler.add_argument("boundary", type=int)
    induced = actions.add_parser("induced", parents=[common])
    induced.add_argument("decomposition")
    induced.add_argument("--simplify", action="store_true")
    presentation.set_defaults(handler=_presentation)

    profiles = commands.add_parser("profiles", parents=[common], help="floor profiles or subsurfaces")
    profiles.add_argument("surface")
    profiles.add_argument("--piece-bound", type=int, default=None)
    profiles.add_argument("--accepted-only", action="store_true")
    profiles.set_defaults(handler=_profiles)

    for name, help_text in (("verify-floor", "verify floor candidates"), ("verify-tower", "verify tower candidates")):
        verify = commands.add_parser(name, parents=[common], help=help_text)
        verify.add_argument("names", nargs="*", help="candidates to verify; all when omitted")
        verify.set_defaults(handler=_verify)

    whitehead = commands.add_parser("whitehead", help="Whitehead's algorithm in free groups")
    actions = whitehead.add_subparsers(dest="action", required=True)
    for action, many in (("minimize", True), ("is-primitive", False), ("is-basis", True)):
        sub = actions.add_parser(action, parents=[common])
        sub.add_argument("words", nargs="+" if many else 1)
        sub.add_argument("--generators", help="comma separated basis; the letters of the words if omitted")
    whitehead.set_defaults(handler=_whitehead)

    catalog = commands.add_parser("catalog", help="run the catalog of constructions")
    actions = catalog.add_subparsers(dest="action", required=True)
    actions.add_parser("list", parents=[common])
    run_parser = actions.add_parser("run", parents=[common])
    run_parser.add_argument("names", nargs="*")
    run_parser.add_argument("--all", action="store_true")
    catalog.set_defaults(handler=_catalog)
    return parser


def run(args: argparse.Namespace, output: Output | None = None) -> int:
    """Dispatch parsed arguments and map errors to exit statuses."""
    output = output or Output(args.format)
    handler: Callable[[argparse.Namespace, Output], int] = args.handler
    debug = logger.isEnabledFor(logging.DEBUG)
    try:
        return handler(args, output)
    except (DocumentParseError, UnknownEntryError) as exc:
        logger.error("%s", exc, exc_info=debug)
        return EXIT_USAGE
    except (MalformedCandidateError, UnsupportedModelError, InvalidStructureError) as exc:
        logger.error("%s", exc, exc_info=debug)
        return EXIT_FAILURE
    except ValueError as exc:
        logger.error("Invalid input: %s", exc, exc_info=debug)
        return EXIT_USAGE

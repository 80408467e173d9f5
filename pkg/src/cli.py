"""
Command-line entry points

    python -m src <command> [options]

Commands: build-lexicon, label, train, evaluate, predict, valence, stats,
serve, anonymize. Exit status is 0 on success, 1 on file or data errors and
2 on usage errors.
"""
import argparse
import logging
import os
import sys
from typing import List, Optional, Sequence, Set

from src import config
from src.analysis.reports import write_stats_report, write_valence_report
from src.analysis.stats import load_profession_pairs, stats_report
from src.analysis.valence import gender_corpora, top_valence_words, valence
from src.api.services import predict_name
from src.classifier.model import Hyperparams
from src.classifier.persistence import load_model, save_model
from src.dataset.anonymize import anonymize
from src.dataset.models import UserProfile
from src.dataset.parser import load_exclusions, load_profiles, write_profiles
from src.dataset.splits import apply_split, load_split
from src.evaluation.experiment import Strategy, fit_model, run_experiment, write_eval_report
from src.evaluation.metrics import majority_baseline
from src.features.fields import FeatureSet
from src.geo.gazetteer import load_gazetteer
from src.geo.geocoder import GeocodeCache, LocationResolver, NominatimGeocoder
from src.lexicon.builder import Lexicon, build_lexicon, collect_candidates
from src.lexicon.matcher import label_profiles
from src.lexicon.store import load_exclusion_list, load_lexicon, save_candidates, save_exclusion_list, save_lexicon
from src.lexicon.tables import load_exception_tables

logger = logging.getLogger(__name__)


def _sibling(path: str, suffix: str) -> str:
    stem, _ = os.path.splitext(path)
    return f"{stem}{suffix}"


def _ensure_parent(path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)


def _read_profiles(path: str, exclude_path: Optional[str] = None) -> List[UserProfile]:
    exclude: Optional[Set[str]] = load_exclusions(exclude_path) if exclude_path else None
    parsed = load_profiles(path, exclude=exclude)
    if parsed.diagnostics:
        logger.warning(f"{path}: {len(parsed.diagnostics)} record(s) skipped")
    return parsed.profiles


def _hyperparams(args: argparse.Namespace) -> Hyperparams:
    return Hyperparams(regularization=args.regularization, epochs=args.epochs, seed=args.seed)


def _parse_bind(bind: str):
    host, sep, port = bind.rpartition(":")
    if not sep or not host:
        raise ValueError(f"--bind must be host:port, got '{bind}'")
    try:
        return host, int(port)
    except ValueError:
        raise ValueError(f"--bind port must be an integer, got '{port}'")


# ----------------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------------

def cmd_build_lexicon(args: argparse.Namespace) -> int:
    profiles = _read_profiles(args.input, args.exclude)
    tables = load_exception_tables(args.exceptions)
    entries, exclusions = build_lexicon(profiles, args.min_count, tables)

    candidates_path = args.candidates or _sibling(args.out, ".candidates.tsv")
    exclusions_path = args.exclusions or _sibling(args.out, ".exclusions.txt")
    for path in (args.out, candidates_path, exclusions_path):
        _ensure_parent(path)

    save_lexicon(args.out, entries)
    save_exclusion_list(exclusions_path, exclusions)
    save_candidates(candidates_path, collect_candidates(profiles, args.min_count, tables))
    print(f"{len(entries)} lexicon entries -> {args.out}")
    print(f"{len(exclusions)} excluded words -> {exclusions_path}")
    print(f"candidate list -> {candidates_path}")
    return 0


def cmd_label(args: argparse.Namespace) -> int:
    profiles = _read_profiles(args.input, args.exclude)
    lexicon = load_lexicon(args.lexicon)
    exclusions_path = args.exclusions or _sibling(args.lexicon, ".exclusions.txt")
    exclusions = load_exclusion_list(exclusions_path)
    gazetteer = load_gazetteer(args.gazetteer)

    geocoder = NominatimGeocoder(cache=GeocodeCache(args.geocode_cache)) if args.geocode else None
    try:
        resolver = LocationResolver(gazetteer, geocoder)
        labeled = label_profiles(
            profiles, lexicon, exclusions, gazetteer, keep_unmatched=args.keep_unmatched, resolver=resolver
        )
    finally:
        if geocoder is not None:
            geocoder.close()
    _ensure_parent(args.out)
    write_profiles(args.out, labeled)
    print(f"{len(labeled)} labeled profile(s) -> {args.out}")
    return 0


def cmd_train(args: argparse.Namespace) -> int:
    profiles = _read_profiles(args.input, args.exclude)
    model = fit_model(profiles, FeatureSet(args.features), _hyperparams(args))
    version = save_model(model, args.out)
    print(f"model {version} (objective {model.training['objective']:.6f}) -> {args.out}")
    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    if args.split:
        if not args.input:
            raise ValueError("--split needs --in")
        train, test = apply_split(_read_profiles(args.input, args.exclude), load_split(args.split))
        train_name = os.path.basename(args.input)
    else:
        if not (args.train and args.test):
            raise ValueError("evaluate needs --train and --test, or --in with --split")
        train = _read_profiles(args.train, args.exclude)
        test = _read_profiles(args.test, args.exclude)
        train_name = os.path.basename(args.train)

    feature_set = FeatureSet(args.features)
    reports = []
    if args.baseline:
        reports.append(majority_baseline(
            [p.gold_gender for p in train if p.has_gold_gender],
            [p.gold_gender for p in test if p.has_gold_gender],
        ))
    reports.append(run_experiment(
        train,
        test,
        feature_set,
        _hyperparams(args),
        strategy=Strategy(args.strategy),
        train_name=train_name,
        tau=args.tau,
        threshold=args.threshold,
    ))

    if args.out:
        write_eval_report(reports, args.out, args.detail)
    for report in reports:
        row = report.row()
        print("\t".join(str(row[column]) for column in ("Features", "Acc", "P", "R", "F1")))
    return 0


def cmd_predict(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    success, message, payload = predict_name(model, args.name)
    if not success:
        raise ValueError(message)
    print(f"{payload['gender']}\t{payload['probability']!r}")
    return 0


def cmd_valence(args: argparse.Namespace) -> int:
    profiles = _read_profiles(args.input, args.exclude)
    corpora = gender_corpora(profiles, source=args.source)
    scores = valence(corpora, min_count=args.min_count)
    if args.out:
        write_valence_report(scores, list(corpora), args.out)
    for category in corpora:
        for s in top_valence_words(scores, category, threshold=args.threshold, k=args.top):
            print(f"{category}\t{s.token}\t{s.scores[category]:.4f}\t{s.counts[category]}")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    profiles = _read_profiles(args.input, args.exclude)
    lexicon: Optional[Lexicon] = load_lexicon(args.lexicon) if args.lexicon else None
    pairs = load_profession_pairs(args.pairs) if args.pairs else []
    report = stats_report(profiles, lexicon, pairs, top_k=args.top)
    paths = write_stats_report(report, args.out)
    print(f"{len(paths)} report table(s) -> {args.out}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from src.api.app import serve_http

    host, port = _parse_bind(args.bind)
    serve_http(args.model, host, port)
    return 0


def cmd_anonymize(args: argparse.Namespace) -> int:
    profiles = _read_profiles(args.input, args.exclude)
    secret_text = args.secret if args.secret is not None else config.ANON_SECRET
    secret = secret_text.encode("utf-8") if secret_text else None
    anonymized = anonymize(profiles, secret=secret)
    _ensure_parent(args.out)
    write_profiles(args.out, anonymized)
    print(f"{len(anonymized)} anonymized profile(s) -> {args.out}")
    return 0


# ----------------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="python -m src", description="Arabic gender profiling toolkit")
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help="Logging level (default: %(default)s)")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_input(sub, required=True):
        sub.add_argument("--in", dest="input", required=required, help="Profiles (JSON Lines)")
        sub.add_argument("--exclude", help="File of user_ids dropped at ingest")

    def add_training(sub):
        sub.add_argument("--features", choices=[f.value for f in FeatureSet], default=FeatureSet.USERNAMES.value)
        sub.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
        sub.add_argument("--regularization", type=float, default=Hyperparams.regularization)
        sub.add_argument("--epochs", type=int, default=Hyperparams.epochs)

    sub = subparsers.add_parser("build-lexicon", help="Build the gender-marker lexicon from descriptions")
    add_input(sub)
    sub.add_argument("--out", required=True, help="Lexicon TSV")
    sub.add_argument("--min-count", type=int, default=config.MIN_COUNT)
    sub.add_argument("--exceptions", default=config.EXCEPTIONS_DIR, help="Exception tables directory")
    sub.add_argument("--candidates", help="Candidate list TSV (default: next to --out)")
    sub.add_argument("--exclusions", help="Exclusion list (default: next to --out)")
    sub.set_defaults(handler=cmd_build_lexicon)

    sub = subparsers.add_parser("label", help="Label gender from descriptions and country from locations")
    add_input(sub)
    sub.add_argument("--lexicon", required=True)
    sub.add_argument("--exclusions", help="Exclusion list (default: next to --lexicon)")
    sub.add_argument("--gazetteer", default=config.GAZETTEER_PATH)
    sub.add_argument("--out", required=True)
    sub.add_argument("--keep-unmatched", action="store_true", help="Keep profiles without a gender marker")
    sub.add_argument("--geocode", action="store_true", help="Ask the online geocoder about locations the gazetteer cannot map")
    sub.add_argument("--geocode-cache", default=config.GEOCODER_CACHE_DB, help="Geocoder answer cache (SQLite)")
    sub.set_defaults(handler=cmd_label)

    sub = subparsers.add_parser("train", help="Train and calibrate a classifier")
    add_input(sub)
    add_training(sub)
    sub.add_argument("--out", default=config.MODEL_PATH, help="Model file")
    sub.set_defaults(handler=cmd_train)

    sub = subparsers.add_parser("evaluate", help="Train on one set, score on another")
    add_input(sub, required=False)
    add_training(sub)
    sub.add_argument("--train")
    sub.add_argument("--test")
    sub.add_argument("--split", help="user_id<TAB>train|test file applied to --in")
    sub.add_argument("--strategy", choices=[s.value for s in Strategy], default=Strategy.CLASSIFIER.value)
    sub.add_argument("--baseline", action="store_true", help="Also report the majority baseline")
    sub.add_argument("--tau", type=float, default=config.DEFAULT_TAU)
    sub.add_argument("--threshold", type=float, default=config.FRIEND_THRESHOLD)
    sub.add_argument("--out", help="Results TSV")
    sub.add_argument("--detail", help="Results detail JSON")
    sub.set_defaults(handler=cmd_evaluate)

    sub = subparsers.add_parser("predict", help="Predict the gender of a name")
    sub.add_argument("--model", default=config.MODEL_PATH)
    sub.add_argument("--name", required=True)
    sub.set_defaults(handler=cmd_predict)

    sub = subparsers.add_parser("valence", help="Gender valence of tweet or description words")
    add_input(sub)
    sub.add_argument("--source", choices=["tweets", "description"], default="tweets")
    sub.add_argument("--min-count", type=int, default=5)
    sub.add_argument("--threshold", type=float, default=0.5)
    sub.add_argument("--top", type=int, default=20)
    sub.add_argument("--out", help="Valence TSV")
    sub.set_defaults(handler=cmd_valence)

    sub = subparsers.add_parser("stats", help="Descriptive statistics report")
    add_input(sub)
    sub.add_argument("--lexicon")
    sub.add_argument("--pairs", default=config.PROFESSION_PAIRS_PATH, help="Profession pairs TSV")
    sub.add_argument("--top", type=int, default=20)
    sub.add_argument("--out", required=True, help="Output directory")
    sub.set_defaults(handler=cmd_stats)

    sub = subparsers.add_parser("serve", help="Serve POST /predict over HTTP")
    sub.add_argument("--model", default=config.MODEL_PATH)
    sub.add_argument("--bind", default=f"{config.SERVICE_HOST}:{config.SERVICE_PORT}")
    sub.set_defaults(handler=cmd_serve)

    sub = subparsers.add_parser("anonymize", help="Replace user ids and screen names")
    add_input(sub)
    sub.add_argument("--out", required=True)
    sub.add_argument("--secret", help="Pseudonym key (default: ANON_SECRET, else random)")
    sub.set_defaults(handler=cmd_anonymize)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command

    Returns:
        Exit status: 0 success, 1 file or data error, 2 usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        logging.basicConfig(level=args.log_level.upper(), format=config.LOG_FORMAT)
        return args.handler(args)
    except (OSError, ValueError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()

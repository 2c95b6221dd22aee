# =============================================================================
## @file    Cli.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Command-line surface of the lab: sample dumps,
#    verification runs and report generation, with
#    reproducible seeds and JSON configuration.
# =============================================================================

import argparse
import logging
import os
import sys

import pandas as pd

from RandomSetLab import Brownian
from RandomSetLab import ConfigParser as cp
from RandomSetLab import FileManager as fm
from RandomSetLab import Poisson
from RandomSetLab import ReportWriter as rw
from RandomSetLab import Streams
from RandomSetLab import Tilt
from RandomSetLab import Verify
from RandomSetLab.ClosedSet import FormatFloat
from RandomSetLab.ClosedSet import MarkCounts
from RandomSetLab.Errors import ConfigError
from RandomSetLab.Errors import DomainError
from RandomSetLab.Errors import RandomSetLabError
from RandomSetLab.Errors import UnknownCheckError

logger = logging.getLogger(__name__)

# exit codes
EXIT_OK        = 0
EXIT_FAILED    = 1
EXIT_BAD_INPUT = 2
EXIT_NUMERICAL = 3

SAMPLE_KINDS = ("poisson", "brownian", "seed", "unit", "product")

def SetupLogging(level = "INFO"):
    """SetupLogging

    Configures the root logger once per process.
    """
    logging.basicConfig(
        level  = getattr(logging, str(level).upper(), logging.INFO),
        format = "%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream = sys.stderr
    )

def _DefaultConfigPath():
    home = os.getenv("RANDOMSET_LAB")
    if home is None:
        return None
    path = os.path.join(home, "configuration", "run.config")
    return path if os.path.isfile(path) else None

# -----------------------------------------------------------------------------
# sample
# -----------------------------------------------------------------------------

def _AtomsText(z):
    return ";".join(f"{FormatFloat(r)}:{m}" for r, m in z.atoms)

def _MarkedFrame(samples, nMarks, seed):
    rows = []
    for i, z in enumerate(samples):
        row = {"seed" : seed, "sample" : i, "t" : z.horizon, "count" : z.count}
        for mark, count in enumerate(MarkCounts(z, nMarks)):
            row[f"mark_{mark}"] = count
        row["atoms"] = _AtomsText(z)
        rows.append(row)
    return pd.DataFrame(rows)

def SampleFrame(kind, n, seed, lam = 1.0, weights = (1.0,), unit = None, t = 1.0, a = 1.0, beta = 1.0,
                dilation = "harmonic", N = 10):
    """SampleFrame

    Draws n samples of the requested kind into a
    DataFrame; the stream only depends on (seed, kind).

    Args:
      kind:     one of SAMPLE_KINDS
      n:        number of samples
      seed:     master seed
      lam:      Poisson intensity
      weights:  Poisson mark weights
      unit:     mark function values for kind "unit"
      t:        horizon
      a:        Brownian starting point
      beta:     seed vacuum rate
      dilation: dilation of kind "product"
      N:        coordinates of kind "product"
    Returns:
      DataFrame
    """
    if n < 1:
        raise DomainError(f"need n >= 1 samples, got {n}")
    rng = Streams.MakeGenerator(seed, "sample", kind)
    match kind:
        case "poisson":
            m = Poisson.PoissonModel(lam, tuple(weights))
            return _MarkedFrame([Poisson.SamplePoisson(m, t, rng) for _ in range(n)], m.nMarks, seed)
        case "unit":
            m  = Poisson.PoissonModel(lam, tuple(weights))
            fn = Poisson.MarkFunction(tuple(unit)) if unit else Poisson.Constant(m)
            return _MarkedFrame([Poisson.SampleUnitFamily(m, fn, t, rng) for _ in range(n)], m.nMarks, seed)
        case "brownian":
            return Brownian.SummariesToFrame([Brownian.SampleZeroSummary(a, t, rng) for _ in range(n)], seed)
        case "seed":
            p = Brownian.SeedParams(a, beta)
            empty, alpha, dm = Tilt.SampleSeedBatch(p, t, n, rng)
            return Tilt.SeedsToFrame(p, t, empty, alpha, dm)
        case "product":
            p = Brownian.SeedParams(a, beta)
            frames = []
            for i in range(n):
                coords = Verify.SampleMarkedProduct(p, t, dilation, N, rng)
                frame  = Brownian.SummariesToFrame(coords, seed)
                frame.insert(1, "sample", i)
                frame.insert(2, "coordinate", range(1, len(coords) + 1))
                frames.append(frame)
            return pd.concat(frames, ignore_index = True)
        case _:
            raise DomainError(f"unknown sample kind '{kind}', choose from {SAMPLE_KINDS}")

def CmdSample(args):
    """CmdSample

    Writes a CSV of n samples; identical flags give a
    byte-identical file.
    """
    if args.seed is None:
        raise ConfigError("sample needs --seed")
    frame = SampleFrame(args.kind, args.n, args.seed, args.lam, args.weights, args.unit, args.t, args.a,
                        args.beta, args.dilation, args.N)
    out = args.out or fm.MakeOutName(".", args.kind, ".samples.csv")
    outDir = os.path.dirname(out)
    if outDir:
        fm.MakeDir(outDir)
    frame.to_csv(out, index = False, float_format = rw.FLOAT_FORMAT)
    logger.info(f"wrote {len(frame)} rows to {out}")
    return EXIT_OK

# -----------------------------------------------------------------------------
# verify
# -----------------------------------------------------------------------------

def _Config(args):
    path = args.config or _DefaultConfigPath()
    return cp.LoadRunConfig(path, seed = args.seed, nSamples = args.n, jobs = args.jobs, outDir = args.out)

def CmdVerify(args):
    """CmdVerify

    Runs one check (or "all"), writes its JSON and CSV
    reports and returns the exit code: 0 if every point
    passes, 1 if a check fails, 3 if a point could not
    be computed.
    """
    config = _Config(args)
    if args.check == "all":
        checks = list(config.checks) or list(Verify.CHECKS)
    else:
        checks = [args.check]
    unknown = [c for c in checks if c not in Verify.CHECKS]
    if unknown:
        raise UnknownCheckError(f"unknown check(s) {unknown}, choose from {sorted(Verify.CHECKS)}")

    code    = EXIT_OK
    reports = {}
    for checkId in checks:
        try:
            report = Verify.RunCheck(checkId, config)
        except ArithmeticError as err:
            logger.error(f"check '{checkId}' failed numerically: {err}")
            code = max(code, EXIT_NUMERICAL)
            continue
        rw.WriteReport(report, config.outDir)
        reports[checkId] = rw.ReportToDict(report)
        if report.errors:
            print(f"[{checkId}] numerical failures:", file = sys.stderr)
            for message in report.errors:
                print(f"  -- {message}", file = sys.stderr)
            code = max(code, EXIT_NUMERICAL)
        elif not report.allPassed:
            code = max(code, EXIT_FAILED)

    if args.check == "all" and reports:
        summary = rw.WriteSummary(reports, config.outDir, plots = False)
        print(summary[["checkId", "result", "points", "passed", "worstMargin"]].to_string(index = False))
    return code

# -----------------------------------------------------------------------------
# report
# -----------------------------------------------------------------------------

def CmdReport(args):
    """CmdReport

    Markdown summary, plot CSVs and PNGs for every
    report in a directory; exit 1 if none are found.
    """
    if not os.path.isdir(args.input):
        print(f"missing report directory: {args.input}", file = sys.stderr)
        return EXIT_FAILED
    reports = rw.ReadReports(args.input)
    if not reports:
        print(f"no reports found in {args.input}", file = sys.stderr)
        return EXIT_FAILED
    wanted  = args.expect or []
    missing = [c for c in wanted if c not in reports]
    summary = rw.WriteSummary(reports, args.out or args.input, plots = not args.no_plots)
    print(summary[["checkId", "result", "slope", "r2"]].to_string(index = False))
    if missing:
        print("missing reports:", file = sys.stderr)
        for checkId in missing:
            print(f"  -- {checkId}", file = sys.stderr)
        return EXIT_FAILED
    return EXIT_OK

# -----------------------------------------------------------------------------
# main
# -----------------------------------------------------------------------------

def MakeParser():
    """MakeParser

    Argument parser with the sample, verify and report
    subcommands.
    """
    parser = argparse.ArgumentParser(prog = "randomset-lab")
    parser.add_argument("--log", help = "Log level", type = str, default = "INFO")
    sub = parser.add_subparsers(dest = "command", required = True)

    sample = sub.add_parser("sample", help = "Dump samples to CSV")
    sample.add_argument("kind", choices = SAMPLE_KINDS)
    sample.add_argument("-n", "--n", help = "Number of samples", type = int, default = 10)
    sample.add_argument("--seed", help = "Master seed (required)", type = int, default = None)
    sample.add_argument("-o", "--out", help = "Output CSV", type = str, default = None)
    sample.add_argument("--lam", help = "Poisson intensity", type = float, default = 1.0)
    sample.add_argument("--weights", help = "Mark weights", type = float, nargs = "+", default = [1.0])
    sample.add_argument("--unit", help = "Mark function values", type = float, nargs = "+", default = None)
    sample.add_argument("-t", "--t", help = "Horizon", type = float, default = 1.0)
    sample.add_argument("-a", "--a", help = "Brownian starting point", type = float, default = 1.0)
    sample.add_argument("--beta", help = "Vacuum rate", type = float, default = 1.0)
    sample.add_argument("--dilation", help = "Product dilation", type = str, default = "harmonic")
    sample.add_argument("-N", "--N", help = "Product coordinates", type = int, default = 10)
    sample.set_defaults(func = CmdSample)

    verify = sub.add_parser("verify", help = "Run a check (or all)")
    verify.add_argument("check", help = "Check id or 'all'")
    verify.add_argument("-c", "--config", help = "JSON run configuration", type = str, default = None)
    verify.add_argument("--seed", help = "Master seed", type = int, default = None)
    verify.add_argument("-n", "--n", help = "Default MC sample size", type = int, default = None)
    verify.add_argument("-j", "--jobs", help = "joblib workers shared by the grid points and substreams of Monte Carlo checks (default: all cores)", type = int, default = None)
    verify.add_argument("-o", "--out", help = "Output directory", type = str, default = None)
    verify.set_defaults(func = CmdVerify)

    report = sub.add_parser("report", help = "Summarize reports")
    report.add_argument("input", help = "Directory with reports")
    report.add_argument("-o", "--out", help = "Output directory (default: input)", type = str, default = None)
    report.add_argument("--expect", help = "Check ids that must be present", nargs = "+", default = None)
    report.add_argument("--no-plots", help = "Skip PNG plots", action = "store_true")
    report.set_defaults(func = CmdReport)
    return parser

def main(argv = None):
    """main

    Parses arguments, dispatches the subcommand and
    maps errors onto exit codes.

    Args:
      argv: argument list (default: sys.argv)
    Returns:
      exit code
    """
    parser = MakeParser()
    args   = parser.parse_args(argv)
    SetupLogging(args.log)
    try:
        return args.func(args)
    except (UnknownCheckError, ConfigError, DomainError) as err:
        print(f"ERROR: {err}", file = sys.stderr)
        return EXIT_BAD_INPUT
    except RandomSetLabError as err:
        print(f"ERROR: numerical failure: {err}", file = sys.stderr)
        return EXIT_NUMERICAL

if __name__ == "__main__":
    sys.exit(main())

# end =========================================================================

# =============================================================================
## @file   run-report.py
#  @author Derek Anderson
#  @date   10.18.2026
# -----------------------------------------------------------------------------
## @brief Turn the reports of a verification run into
#    a markdown summary, plot CSVs and PNG plots.
# =============================================================================

from dataclasses import dataclass
import argparse as ap
import os
import sys

from RandomSetLab import ReportWriter as rw
from RandomSetLab import Verify

# -----------------------------------------------------------------------------
# Global Options
# -----------------------------------------------------------------------------

@dataclass
class Option:
    """Option

    Data class to hold global opts
    for the report.

    Members:
      inPath:   directory with *.report.json files
      outPath:  directory for summary, CSVs and plots
      doPlots:  turn on/off PNG plots
      requireAll: fail if a registered check has no report
    """
    inPath     : str
    outPath    : str
    doPlots    : bool
    requireAll : bool

# set global options
GlobalOpts = Option(
    inPath     = os.getenv("RANDOMSET_LAB_OUT", "./out"),
    outPath    = os.getenv("RANDOMSET_LAB_OUT", "./out"),
    doPlots    = True,
    requireAll = False
)

def main(opts = GlobalOpts):
    """main

    Reads the reports and writes the summary.

    Args:
      opts: report options
    Returns:
      exit code
    """
    parser = ap.ArgumentParser()
    parser.add_argument("-i", "--input", help = "Report directory", type = str, default = opts.inPath)
    parser.add_argument("-o", "--output", help = "Output directory", type = str, default = None)
    parser.add_argument("--all", help = "Require every registered check", action = "store_true")
    args = parser.parse_args()

    # announce what's going to be processed
    print(f"    Collecting reports from {args.input}")
    reports = rw.ReadReports(args.input) if os.path.isdir(args.input) else {}
    if len(reports) == 0:
        print("WARNING: no reports found, exiting!")
        return 1
    for checkId in reports:
        print(f"      -- {checkId}")

    # write summary, plot data and plots
    summary = rw.WriteSummary(reports, args.output or args.input, plots = opts.doPlots)
    print(summary.to_string(index = False))

    # list anything that is missing
    missing = [c for c in Verify.CHECKS if c not in reports]
    if (args.all or opts.requireAll) and missing:
        print("WARNING: missing reports:")
        for checkId in missing:
            print(f"      -- {checkId}")
        return 1
    return 0

if __name__ == "__main__":
   sys.exit(main())

# end =========================================================================

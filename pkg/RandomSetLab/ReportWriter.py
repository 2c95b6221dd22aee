# =============================================================================
## @file    ReportWriter.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Module to write check reports (JSON + CSV
#    mirror), collect them back, and turn them into
#    plot-ready CSVs, PNG plots and a markdown summary.
# =============================================================================

import json
import logging
import math

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
import seaborn as sns

from RandomSetLab import FileManager as fm

logger = logging.getLogger(__name__)

# floats in CSV output
FLOAT_FORMAT = "%.17g"

# x axis of the plot-data of each check
PLOT_AXES = {
    "tv-gamma"              : "c",
    "tail"                  : "r",
    "bridge"                : "u",
    "block-weights"         : "u",
    "hellinger-slope"       : "lambda",
    "kakutani"              : "N",
    "overlap"               : "t",
    "diam-tail"             : "u",
    "poisson-kernel"        : "t",
    "poisson-factorization" : None,
    "arcsine-laplace"       : "c",
    "seed"                  : None,
    "two-block"             : "u"
}

# checks plotted on log-log axes
LOG_AXES = ("bridge", "block-weights", "hellinger-slope", "two-block", "tv-gamma", "tail", "kakutani")

# -----------------------------------------------------------------------------
# Writing reports
# -----------------------------------------------------------------------------

def _Fit(fit):
    return {
        "slope"     : fit.slope,
        "intercept" : fit.intercept,
        "r2"        : fit.r2,
        "xs"        : list(fit.xs),
        "ys"        : list(fit.ys)
    }

def ReportToDict(report):
    """ReportToDict

    JSON-ready dictionary of a BoundReport; the
    first fit (if any) is promoted to the top level
    slope/r2 keys.

    Args:
      report: BoundReport
    Returns:
      dictionary
    """
    data = {
        "lemmaId"     : report.checkId,
        "citation"    : report.citation,
        "params"      : report.params,
        "bound"       : report.bound,
        "actual"      : report.actual,
        "stderr"      : report.stderr,
        "pass"        : report.passed,
        "tol"         : report.tol,
        "allPass"     : report.allPassed,
        "worstMargin" : report.worstMargin,
        "gates"       : report.gates,
        "fits"        : {name: _Fit(fit) for name, fit in report.fits.items()},
        "extra"       : report.extra,
        "errors"      : report.errors,
        "seed"        : report.seed,
        "n"           : report.n,
        "wallTimeMs"  : report.wallTimeMs
    }
    if report.fits:
        first = next(iter(report.fits.values()))
        data["slope"] = first.slope
        data["r2"]    = first.r2
    return data

def ReportToFrame(data):
    """ReportToFrame

    Flat CSV mirror of a report dictionary: one row
    per grid point, parameters spread into columns.
    """
    frame = pd.DataFrame(data["params"]) if data["params"] else pd.DataFrame(index = range(len(data["bound"])))
    frame["bound"]  = data["bound"]
    frame["actual"] = data["actual"]
    frame["stderr"] = data["stderr"]
    frame["pass"]   = [int(p) for p in data["pass"]]
    frame.insert(0, "lemmaId", data["lemmaId"])
    return frame

def _Clean(obj):
    """NaN/inf to None, numpy scalars to python"""
    if isinstance(obj, dict):
        return {key: _Clean(value) for key, value in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [_Clean(item) for item in obj]
    elif isinstance(obj, (np.floating, float)):
        value = float(obj)
        return value if math.isfinite(value) else None
    elif isinstance(obj, np.integer):
        return int(obj)
    elif isinstance(obj, np.bool_):
        return bool(obj)
    else:
        return obj

def WriteReport(report, outDir):
    """WriteReport

    Writes <check>.report.json and <check>.report.csv.

    Args:
      report: BoundReport
      outDir: output directory
    Returns:
      tuple of the two paths
    """
    fm.MakeDir(outDir)
    data     = _Clean(ReportToDict(report))
    jsonPath = fm.MakeOutName(outDir, report.checkId, ".report.json")
    csvPath  = fm.MakeOutName(outDir, report.checkId, ".report.csv")
    with open(jsonPath, "w") as f:
        json.dump(data, f, indent = 2)
    ReportToFrame(data).to_csv(csvPath, index = False, float_format = FLOAT_FORMAT)
    logger.info(f"wrote {jsonPath} and {csvPath}")
    return jsonPath, csvPath

def ReadReports(inDir):
    """ReadReports

    Loads every JSON report in a directory.

    Args:
      inDir: directory written by WriteReport
    Returns:
      dict checkId -> report dictionary
    """
    reports = {}
    for path in fm.FindReports(inDir):
        with open(path) as f:
            data = json.load(f)
        reports[data.get("lemmaId", fm.CheckIdFromName(path))] = data
    return reports

def _Num(value):
    return math.nan if value is None else float(value)

# -----------------------------------------------------------------------------
# Plot data, plots and summary
# -----------------------------------------------------------------------------

def PlotFrame(data):
    """PlotFrame

    Plot-ready frame with columns x, y, yerr, bound.
    Checks without a natural axis use the row index.
    """
    axis = PLOT_AXES.get(data["lemmaId"])
    xs = []
    for i, point in enumerate(data["params"]):
        xs.append(_Num(point.get(axis)) if axis is not None and axis in point else float(i))
    return pd.DataFrame({
        "x"     : xs,
        "y"     : [_Num(v) for v in data["actual"]],
        "yerr"  : [_Num(v) for v in data["stderr"]],
        "bound" : [_Num(v) for v in data["bound"]]
    })

def PlotReport(data, frame, outDir):
    """PlotReport

    Actual vs. bound scatter with MC error bars.

    Args:
      data:   report dictionary
      frame:  output of PlotFrame
      outDir: output directory
    Returns:
      path of the PNG
    """

    # set plot style
    sns.set(style = "white")
    fig, ax = plt.subplots(nrows = 1, ncols = 1, figsize = (8, 6))

    # actual values with error bars
    ax.scatter(frame["x"], frame["y"], color = "midnightblue", alpha = 0.5, label = "actual")
    ax.errorbar(frame["x"], frame["y"], yerr = frame["yerr"], ecolor = "midnightblue", capsize = 7, fmt = "none")

    # bound
    ax.scatter(frame["x"], frame["bound"], color = "orangered", marker = "_", s = 200, label = "bound")

    # fitted line, if any
    for name, fit in data.get("fits", {}).items():
        xs = np.asarray(fit["xs"], dtype = float)
        ax.plot(xs, math.exp(fit["intercept"]) * xs ** fit["slope"], color = "mediumblue", linewidth = 0.8,
                label = f"fit {name}: slope {fit['slope']:.3f}, $r^2$ {fit['r2']:.3f}")

    positive = bool(np.all(frame["x"] > 0)) and bool(np.all(frame["y"].dropna() > 0))
    if data["lemmaId"] in LOG_AXES and positive:
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.set_title(data.get("citation", data["lemmaId"]), fontsize = 9)
    ax.set_xlabel(PLOT_AXES.get(data["lemmaId"]) or "point")
    ax.set_ylabel("value")
    ax.legend(fontsize = 8)

    path = fm.MakeOutName(outDir, data["lemmaId"], ".png")
    fig.savefig(path, dpi = 120)
    plt.close(fig)
    return path

def SummaryFrame(reports):
    """SummaryFrame

    One row per check: id, citation, points, pass,
    worst margin, slope, r2.
    """
    rows = []
    for checkId, data in sorted(reports.items()):
        rows.append({
            "checkId"     : checkId,
            "citation"    : data.get("citation", ""),
            "points"      : len(data["pass"]),
            "passed"      : sum(1 for p in data["pass"] if p),
            "result"      : "PASS" if data.get("allPass", all(data["pass"])) else "FAIL",
            "worstMargin" : _Num(data.get("worstMargin")),
            "slope"       : _Num(data.get("slope")),
            "r2"          : _Num(data.get("r2"))
        })
    return pd.DataFrame(rows)

def WriteMarkdown(summary, path):
    """WriteMarkdown

    Markdown table of a SummaryFrame; missing
    numbers are left blank.
    """
    table = summary.astype(object).where(summary.notna(), None)
    with open(path, "w") as f:
        f.write("# Verification summary\n\n")
        f.write(table.to_markdown(index = False, floatfmt = ".6g", missingval = "") + "\n")
    return path

def WriteSummary(reports, outDir, plots = True):
    """WriteSummary

    Plot CSVs, optional PNGs and the markdown summary
    of a set of report dictionaries.

    Args:
      reports: dict checkId -> report dictionary
      outDir:  output directory
      plots:   also render PNGs
    Returns:
      SummaryFrame
    """
    fm.MakeDir(outDir)
    for checkId, data in sorted(reports.items()):
        frame = PlotFrame(data)
        frame.to_csv(fm.MakeOutName(outDir, checkId, ".plot.csv"), index = False, float_format = FLOAT_FORMAT)
        if plots:
            PlotReport(data, frame, outDir)
    summary = SummaryFrame(reports)
    WriteMarkdown(summary, fm.MakeOutName(outDir, "summary", ".md"))
    logger.info(f"summarized {len(reports)} checks in {outDir}")
    return summary

# end =========================================================================

# =============================================================================
## @file    FileManager.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Module to generate appropriate output
#    file names for reports, dumps and plots
# =============================================================================

import os
import pathlib

def MakeDir(path):
    """MakeDir

    Creates a directory (and parents) if
    it doesn't already exist.

    Args:
      path: directory to create
    Returns:
      the path
    """
    os.makedirs(path, exist_ok = True)
    return path

def GetBody(checkId, label = ""):
    """GetBody

    Construct body (check, label) of a file name;
    dashes in check ids become underscores.

    Args:
      checkId: check or sample kind
      label:   optional extra tag
    Returns:
      body of the file name
    """
    body = checkId.replace("-", "_")
    if label != "":
        body += "_" + label
    return body

def MakeOutName(outDir, checkId, suffix, label = ""):
    """MakeOutName

    Output file name <outDir>/<check>[_<label>]<suffix>.

    Args:
      outDir:  output directory
      checkId: check id or sample kind
      suffix:  extension incl. the dot, eg. ".report.json"
      label:   optional extra tag
    Returns:
      path of the output file
    """
    return os.path.join(outDir, GetBody(checkId, label) + suffix)

def CheckIdFromName(path):
    """CheckIdFromName

    Inverse of MakeOutName for report files.
    """
    name = pathlib.Path(path).name
    return name.split(".")[0].replace("_", "-")

def FindReports(inDir):
    """FindReports

    Sorted JSON report files in a directory.
    """
    return sorted(pathlib.Path(inDir).glob("*.report.json"))

# end =========================================================================

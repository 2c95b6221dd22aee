# =============================================================================
## @file    ConfigParser.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Module to parse run configuration JSON files
#    and return a structured RunConfig.
# =============================================================================

from dataclasses import dataclass
from dataclasses import field
from dataclasses import replace
import json
import logging
import os

from RandomSetLab.Errors import ConfigError

logger = logging.getLogger(__name__)

# env var overriding the output directory
OUT_ENV = "RANDOMSET_LAB_OUT"

# smallest sample size accepted by MC checks
MIN_SAMPLES = 10000

def _expand_env_vars(obj):
    """_expand_env_vars

    Recursively expands environment variables in strings
    within dictionaries and lists.

    Args:
      obj: object to process (dict, list, str, or other)
    Returns:
      object with environment variables expanded
    """
    if isinstance(obj, dict):
        return {key: _expand_env_vars(value) for key, value in obj.items()}
    elif isinstance(obj, list):
        return [_expand_env_vars(item) for item in obj]
    elif isinstance(obj, str):
        return os.path.expandvars(obj)
    else:
        return obj

def ReadJsonFile(jsonFile):
    """ReadJsonFile

    Checks if specified json file exists, and loads
    it if it does.

    Args:
      jsonFile: file to read
    Returns:
      dictionary of loaded data
    """
    if not os.path.isfile(jsonFile):
        raise ConfigError(f"the json file '{jsonFile}' does not exist")
    with open(jsonFile) as f:
        try:
            data = json.loads(f.read())
        except json.JSONDecodeError as err:
            raise ConfigError(f"could not parse '{jsonFile}': {err}") from err
    return _expand_env_vars(data)

@dataclass(frozen = True)
class RunConfig:
    """RunConfig

    Settings of one lab run.

    Members:
      seed:           master seed (required)
      outDir:         directory for reports and dumps
      nSamples:       default MC sample size
      jobs:           joblib workers (-1 = all cores)
      workers:        MC substreams per point
      grids:          per-check parameter overrides
      checks:         check ids run by "verify all"
      a:              seed starting point
      beta:           seed vacuum rate
      bridgeConstant: factor on the bare bridge bound
    """
    seed           : int
    outDir         : str = "./out"
    nSamples       : int = 1000000
    jobs           : int = -1
    workers        : int = 8
    grids          : dict = field(default_factory = dict)
    checks         : tuple = ()
    a              : float = 1.0
    beta           : float = 1.0
    bridgeConstant : float = 1.0

    def Grid(self, checkId):
        """Grid

        Parameter overrides for a check (empty dict
        when none are configured).
        """
        return dict(self.grids.get(checkId, {}))

def MakeRunConfig(cfg = None, **overrides):
    """MakeRunConfig

    Builds a RunConfig from a loaded JSON dictionary;
    RANDOMSET_LAB_OUT replaces the file's output
    directory, and keyword overrides (eg. from CLI
    flags) that are not None win over both.

    Args:
      cfg:       dictionary from ReadJsonFile (or None)
      overrides: RunConfig fields to override
    Returns:
      validated RunConfig
    """
    values = dict(cfg or {})
    unknown = set(values) - set(RunConfig.__dataclass_fields__)
    if unknown:
        raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")
    if os.environ.get(OUT_ENV):
        values["outDir"] = os.environ[OUT_ENV]
    elif "$" in str(values.get("outDir", "")):
        # unexpanded variable in the file
        values.pop("outDir")
    values.update({key: val for key, val in overrides.items() if val is not None})
    if values.get("seed") is None:
        raise ConfigError("a seed is required (no wall-clock default)")
    values["checks"] = tuple(values.get("checks", ()))

    try:
        config = RunConfig(**values)
        config = replace(config, seed = int(config.seed), nSamples = int(config.nSamples))
    except (TypeError, ValueError) as err:
        raise ConfigError(f"bad configuration: {err}") from err
    if config.nSamples < MIN_SAMPLES:
        raise ConfigError(f"nSamples must be >= {MIN_SAMPLES}, got {config.nSamples}")
    if config.seed < 0 or config.seed >= 2 ** 64:
        raise ConfigError(f"seed must be a 64-bit unsigned integer, got {config.seed}")
    logger.debug(f"run configuration: {config}")
    return config

def LoadRunConfig(path = None, **overrides):
    """LoadRunConfig

    ReadJsonFile + MakeRunConfig; no file means
    defaults plus overrides.
    """
    cfg = ReadJsonFile(path) if path else None
    return MakeRunConfig(cfg, **overrides)

# end =========================================================================

# =============================================================================
## @file   run-randomset-lab.py
#  @author Derek Anderson
#  @date   10.18.2026
# -----------------------------------------------------------------------------
## @brief Main executable and wrapper script for
#    the random-set lab (sample, verify, report).
# =============================================================================

import sys

from RandomSetLab import Cli

def main(*args, **kwargs):
    """main

    Wrapper around the lab's command line.
    Usage examples:

      run-randomset-lab.py sample poisson --lam 2 -n 10 --seed 42
      run-randomset-lab.py verify kakutani --seed 1
      run-randomset-lab.py verify all -c $RANDOMSET_LAB/configuration/run.config
      run-randomset-lab.py report ./out

    Returns:
      exit code (0 pass, 1 failed, 2 bad input, 3 numerical failure)
    """
    return Cli.main(*args, **kwargs)

if __name__ == "__main__":
   sys.exit(main())

# end =========================================================================

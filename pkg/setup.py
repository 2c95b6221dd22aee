# =============================================================================
## @file   setup.py
#  @author Derek Anderson
#  @date   10.18.2026
# -----------------------------------------------------------------------------
## @brief Setup script for easy installation of
#    the random-set lab
# =============================================================================

import setuptools

setuptools.setup(
    name             = 'randomset-lab',
    version          = '0.0.0',
    packages         = ['RandomSetLab'],
    python_requires  = '>=3.10',
    install_requires = [
        'numpy',
        'scipy',
        'pandas',
        'tabulate',
        'matplotlib',
        'seaborn',
        'joblib'
    ],
    extras_require   = {'test' : ['pytest', 'hypothesis']}
)

# end =========================================================================

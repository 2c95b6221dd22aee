"""
RandomSetLab

Simulation and numerical verification lab for
random closed subsets of the line: Poisson and
Brownian zero-set samplers, the tilted arcsine
seed, Hellinger/TV distances and the checks of
the product-system bounds.
"""

__version__="0.0.0"

from .Errors import *
from .ClosedSet import *
from .SpecFun import *
from .Streams import *
from .Poisson import *
from .Brownian import *
from .Tilt import *
from .Distance import *
from .Verify import *
from .ConfigParser import *
from .FileManager import *

__all__ = [
    "Anchor",
    "ArcsineCdf",
    "ArcsineDensity",
    "ArcsinePhi",
    "BesselI0",
    "BesselI0e",
    "BlockDecomposition",
    "BlockHellinger",
    "BlockTerm",
    "BoundReport",
    "BrownianZeroSummary",
    "CheckArcsineLaplace",
    "CheckBlockWeights",
    "CheckBridgeBound",
    "CheckDiamTail",
    "CheckKakutani",
    "CheckLinearOverlap",
    "CheckPoissonFactorization",
    "CheckPoissonKernel",
    "CheckSeed",
    "CheckTailBound",
    "CheckTvGammaBound",
    "CheckTwoBlockOverlap",
    "ClosedSet",
    "Concat",
    "ConcatMarked",
    "ConfigError",
    "CovarianceKernel",
    "CoxCountCdf",
    "CoxDelta",
    "CoxDensity",
    "DegenerateTiltError",
    "Diam",
    "Dilate",
    "DomainError",
    "Empty",
    "FitError",
    "FitSlope",
    "FormatClosedSet",
    "GammaHalfDensity",
    "GammaHalfSurvival",
    "GramRank",
    "HellingerDensities",
    "HellingerDistanceSq",
    "HellingerSmallnessSlope",
    "HellingerWeighted",
    "HittingDensity",
    "HittingSurvival",
    "IndexGram",
    "Integrate",
    "InvalidWindowError",
    "KakutaniProduct",
    "KilledEndpointDensity",
    "LoadRunConfig",
    "LocalizedNormalizer",
    "LogHittingDensity",
    "MakeDir",
    "MakeGenerator",
    "MakeOutName",
    "MakeRunConfig",
    "MarkFunction",
    "MarkedPointSet",
    "MCEstimate",
    "MCMean",
    "MCWeightedMean",
    "McEventProb",
    "McEventProbSplit",
    "McEventProbGrid",
    "PalmUniformization",
    "ParseClosedSet",
    "PoissonIndex",
    "PoissonModel",
    "QuadSingular",
    "QuadratureError",
    "RandomSetLabError",
    "ReadJsonFile",
    "Restrict",
    "RestrictMarked",
    "RunCheck",
    "RunConfig",
    "SampleArcsineLastZero",
    "SampleCoxPoisson",
    "SampleHittingTime",
    "SampleMarkedProduct",
    "SampleMeanderEndpoint",
    "SamplePoisson",
    "SampleSeed",
    "SampleSeedBatch",
    "SampleTiltedArcsine",
    "SampleUnitFamily",
    "SampleZeroSummary",
    "Scale",
    "SeedDensity",
    "SeedParams",
    "SlopeFit",
    "SplitCounts",
    "Sup",
    "SurvivalProbability",
    "TiltedArcsine",
    "TiltedArcsineCdf",
    "TiltedArcsineTail",
    "TvDensities",
    "UnitDensity",
    "UnitInnerProduct",
    "UnknownCheckError",
    "VacuumOverlap",
    "VoidProbability"
]

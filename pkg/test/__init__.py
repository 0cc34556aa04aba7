from hypothesis import HealthCheck, settings

# Discovery reaches every test class both here and through its own module.
settings.register_profile("tilecount", suppress_health_check=[HealthCheck.differing_executors])
settings.load_profile("tilecount")

from test.commands.test_main import TestCount, TestRegionCommands, TestTable, TestVerify
from test.models.test_environment import TestEnvironment
from test.models.test_models import (
    TestFlashlightParams,
    TestPlanePartition,
    TestRegionModels,
    TestShapeModels,
    TestVerificationReport,
)
from test.services.lattice.test_bijections import (
    TestLozengeTypes,
    TestPlanePartitionBijection,
    TestShiftedBijection,
)
from test.services.lattice.test_geometry import TestCells, TestOuterBoundary, TestReflection, TestTrace
from test.services.lattice.test_kuo import (
    TestCondensation,
    TestFlashlightCondensation,
    TestRecurrence,
    TestZeroYExperiment,
)
from test.services.lattice.test_matching import TestCountMatchings, TestEnumerateTilings, TestForcedReduction
from test.services.lattice.test_regions import (
    TestFlashlights,
    TestHexagons,
    TestParseRegion,
    TestQuarteredHexagons,
    TestShapeRegions,
)
from test.services.lattice.test_render import TestRegionDump, TestRenderSvg
from test.services.test_cache import TestCountCache
from test.services.test_exactlinalg import TestDeterminant, TestPfaffian, TestShapeCounts
from test.services.test_exactnum import TestBinomials, TestExactProducts, TestFactorials, TestQPolynomials
from test.services.test_formulas import (
    TestBaseCaseIdentities,
    TestFlashlightFormulas,
    TestQAnalogs,
    TestRecurrenceIdentities,
    TestShapeFormulas,
)
from test.services.test_ppcore import TestEnumeration, TestStatistics, TestSymmetry
from test.services.test_shapes import TestMakeShape, TestParseShape, TestShapeOperations
from test.services.test_suites import TestInstances, TestRunSuite
from test.test_profile import TestHypothesisProfile

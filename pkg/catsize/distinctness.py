"""
catsize - Macro/meso distinctness
Classifies a displacement by whether the eye can resolve it, with or without magnification
"""

import logging

from typing import Optional

from .models import CatSizeError, Distinctness, ErrorCodes, ResolutionCriterion


logger = logging.getLogger(__name__)


def classify(
    displacement: float,
    duration: float,
    available_magnification: float = 1.0,
    criterion: Optional[ResolutionCriterion] = None
) -> Distinctness:
    """Classify a displacement (cm) accumulated over `duration` (s).

    Thresholds are closed: a displacement equal to the resolution limit is
    resolvable. Mesoscopic means the displacement clears the limit only once
    magnified by at most `available_magnification`; the reported magnification
    is the minimum that does it. Durations beyond the observation window are
    unresolvable.
    """
    criterion = criterion or ResolutionCriterion.human_eye()
    if not duration > 0:
        raise CatSizeError(f"duration must be positive, got {duration}", ErrorCodes.NONPOSITIVE_DURATION)
    if displacement < 0:
        raise CatSizeError(f"displacement must be non-negative, got {displacement}", ErrorCodes.INVALID_VALUE)
    if available_magnification < 1.0:
        raise CatSizeError(
            f"available magnification must be >= 1, got {available_magnification}",
            ErrorCodes.INVALID_VALUE
        )

    limit = criterion.min_resolvable_length
    if duration > criterion.max_observation_time or displacement == 0:
        result = Distinctness.unresolvable()
    elif displacement >= limit:
        result = Distinctness.macroscopic()
    elif displacement * available_magnification >= limit:
        required = limit / displacement
        # last-ulp displacements below the limit round to a ratio of 1
        result = Distinctness.mesoscopic(required) if required > 1.0 else Distinctness.macroscopic()
    else:
        result = Distinctness.unresolvable()

    logger.debug(f"classify({displacement} cm, {duration} s, M={available_magnification}) -> {result.kind.value}")
    return result


def magnification_from_x(x: float) -> float:
    """Magnification M = 1/X for the X < 1 parameter of a 5X micron particle"""
    if not 0 < x <= 1:
        raise CatSizeError(f"X must lie in (0, 1], got {x}", ErrorCodes.INVALID_VALUE)
    return 1.0 / x


def mesoscopic_diameter_um(x: float) -> float:
    """Diameter (microns) of the particle that is mesoscopically distinct at magnification 1/X"""
    magnification_from_x(x)
    return 5.0 * x

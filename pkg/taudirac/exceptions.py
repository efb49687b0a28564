""" Copyright 2026 The taudirac Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

"""Module exceptions.

Contains custom module exception classes.
"""


class TauDiracError(Exception):
    """Base class for all package errors."""


class InvalidLoggingLevelError(TauDiracError):
    """Invalid logging level encountered."""


class InvalidConfigError(TauDiracError):
    """Malformed or out of range configuration encountered."""


class NotSubluminalError(TauDiracError):
    """Four-momentum is not subluminal."""


class EnergySignError(TauDiracError):
    """Four-momentum has the wrong (or zero) energy sign."""


class ThetaAmbiguityError(TauDiracError):
    """Step function evaluated at equal parameter values."""


class MasslessNumeratorError(TauDiracError):
    """Massive boson numerator requested for zero mass."""


class PoleError(TauDiracError):
    """Influence function evaluated on its pole."""


class PotentialDecompositionError(TauDiracError):
    """Potential has no definite four-momentum decomposition."""


class NormalizationMismatchError(TauDiracError):
    """Waves with different normalization conventions combined."""


class OffLightConeError(TauDiracError):
    """Real photon leg is off the light cone or not transverse."""


class ProcessSpecError(TauDiracError):
    """Process declaration does not fit the requested amplitude."""


class ThresholdError(TauDiracError):
    """Process requested below its kinematic threshold."""


class MissingConservationFactorError(TauDiracError):
    """Amplitude lacks its conservation delta factors."""


class DegenerateFluxError(TauDiracError):
    """Incident flux radicand is not positive."""


class RegularizationError(TauDiracError):
    """Regularization powers failed to cancel."""


class UnknownProcessError(TauDiracError):
    """Requested process is not supported."""



class UnknownSuiteError(TauDiracError):
    """Unknown verification suite name."""

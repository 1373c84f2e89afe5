"""
Filters computing the columns of the experiment tables. Every row is a dict holding at least the time "t";
keys starting with '_' carry intermediate objects (shapes, Kraus sets, states) and are never written out.
"""

__version__ = '1.0'
__all__ = [
    'ShapeFilter', 'StateFilter', 'VolumeFilter', 'EntropyFilter', 'DistanceFilter',
    'InvariantFilter', 'ConcurrenceFilter', 'ExtremaFilter'
]

__author__ = 'GDPKIT'

from typing import Any, Collection, List, Mapping, Sequence, Tuple

from .pipeline import RowFilter, Stream
from ..algebra.density_matrix import DensityMatrix
from ..channels.me2kraus import LocalGenerator, KrausSet, apply_channel, kraus_from_choi
from ..channels.gdp_channel import shape, standard_generator, gdp_kraus, gdp_choi, standard_kraus
from ..metrics.measures import (ellipsoid_volume, UNIT_BALL_VOLUME, volume_rate, von_neumann_entropy,
                                entropy_bits, trace_distance)
from ..entanglement.pair import BELL_PHI_PLUS, evolve_pair
from ..entanglement.concurrence import concurrence, entanglement_of_formation
from ..entanglement.sudden_death import QubitChannel
from ..validation.validation import density_matrix_validator

CHANNELS = ("gdp", "dp")


class ShapeFilter(RowFilter):
    '''
    Adds the dimensionless time "tau" and the shapes of the GDP channel and of its standard comparison.
    '''

    def __init__(self, inputs: str, outputs: str, generator: LocalGenerator):
        super().__init__(inputs, outputs)
        self.__generators = {"gdp": generator, "dp": standard_generator(generator)}

    def _on_data(self, data):
        for name, generator in self.__generators.items():
            data["_shape_" + name] = shape(generator, data["t"])
        c = data["_shape_gdp"]
        data["tau"] = 0.0 if c is None else c.tau
        self._push_data(data)


class StateFilter(RowFilter):
    '''
    Evolves the initial state with both channels, needs the ShapeFilter columns.
    '''

    def __init__(self, inputs: str, outputs: str, initial: DensityMatrix):
        super().__init__(inputs, outputs)
        self.__initial = initial

    def _on_data(self, data):
        data["_rho_init"] = self.__initial
        for name in CHANNELS:
            k = self.kraus(name, data["_shape_" + name])
            data["_kraus_" + name] = k
            data["_rho_" + name] = apply_channel(k, self.__initial)
        self._push_data(data)

    @staticmethod
    def kraus(name: str, c) -> KrausSet:
        '''
        Returns:
            The closed form Kraus set of the named channel at shape c, the identity for a null shape.
            Omega at -2 or 0 (one of the rates vanishing) goes through the closed form Choi matrix.
        '''
        if c is None:
            return KrausSet.identity()
        if name == "dp":
            return standard_kraus(c.tau)
        if not -2 < c.omega < 0:
            return kraus_from_choi(gdp_choi(c), time_tag=c.tau)
        return gdp_kraus(c)


class VolumeFilter(RowFilter):
    '''
    Adds the Bloch ellipsoid volumes V_* and their relative rates kappa_*.
    '''

    def __init__(self, inputs: str, outputs: str, generator: LocalGenerator):
        super().__init__(inputs, outputs)
        self.__generators = {"gdp": generator, "dp": standard_generator(generator)}

    def _on_data(self, data):
        for name, generator in self.__generators.items():
            c = data["_shape_" + name]
            data["V_" + name] = UNIT_BALL_VOLUME if c is None else ellipsoid_volume(c)
            data["kappa_" + name] = volume_rate(generator, data["t"])
        self._push_data(data)


class EntropyFilter(RowFilter):

    def __init__(self, inputs: str, outputs: str):
        super().__init__(inputs, outputs)

    def _on_data(self, data):
        for name in CHANNELS:
            s = von_neumann_entropy(data["_rho_" + name])
            data["S_" + name] = s
            data["S_{}_bits".format(name)] = entropy_bits(s)
        self._push_data(data)


class DistanceFilter(RowFilter):
    '''
    Adds the trace distances of each evolved state from the initial one and between the two channels.
    '''

    def __init__(self, inputs: str, outputs: str):
        super().__init__(inputs, outputs)

    def _on_data(self, data):
        for name in CHANNELS:
            data["Tdist_{}_init".format(name)] = trace_distance(data["_rho_" + name], data["_rho_init"])
        data["Tdist_gdp_dp"] = trace_distance(data["_rho_gdp"], data["_rho_dp"])
        self._push_data(data)


class InvariantFilter(RowFilter):
    '''
    Re-validates the states of each row against the density matrix invariants. Rows pass unchanged,
    failures are appended to the "invariant_failures" state as (t, key, failed checks).
    '''

    def __init__(self, inputs: str, outputs: str, keys: Collection[str]):
        super().__init__(inputs, outputs)
        self.__keys = keys
        self.__validator = density_matrix_validator()

    def setup(self, inputs: Stream, outputs: Stream, state: Mapping[str, Any]):
        super().setup(inputs, outputs, state)
        state.setdefault("invariant_failures", list())

    def _on_data(self, data):
        for key in self.__keys:
            rho = data[key]
            mat = rho.mat if isinstance(rho, DensityMatrix) else rho
            failed = self.__validator.failures(mat)
            if failed:
                self._state["invariant_failures"].append((data["t"], key, failed))
        self._push_data(data)


class ConcurrenceFilter(RowFilter):
    '''
    Evolves a pair state under the GDP and the standard channels and adds C_* and EoF_*.
    '''

    def __init__(self, inputs: str, outputs: str, channels: Mapping[str, Tuple[QubitChannel, QubitChannel]],
                 psi0: Sequence[complex] = BELL_PHI_PLUS):
        '''
        Parameters:
            channels : Mapping[str, Tuple[QubitChannel, QubitChannel]]
                The channels of qubit 1 and qubit 2, keyed by "gdp" and "dp".
            psi0 : Sequence[complex]
                Initial pair state.
        '''
        super().__init__(inputs, outputs)
        self.__channels = channels
        self.__psi0 = psi0

    def _on_data(self, data):
        t = data["t"]
        for name, (first, second) in self.__channels.items():
            pair = evolve_pair(self.__psi0, first.kraus_at(t), second.kraus_at(t))
            c = concurrence(pair)
            data["_pair_" + name] = pair
            data["C_" + name] = c
            data["EoF_" + name] = entanglement_of_formation(c)
        self._push_data(data)


class ExtremaFilter(RowFilter):
    '''
    Tracks the largest and smallest value of each column in `keys` as the "max" and "min" state,
    rows pass unchanged.
    '''

    def __init__(self, inputs: str, outputs: str, keys: Sequence[str]):
        super().__init__(inputs, outputs)
        self.__keys = keys
        self._state = dict()

    def setup(self, inputs: Stream, outputs: Stream, state: Mapping[str, Any]):
        super().setup(inputs, outputs, state)
        for stat in ("max", "min"):
            if state.get(stat, None) is not None:
                raise ValueError("state '{}' is already taken".format(stat))
            state[stat] = dict()

    def _on_data(self, data):
        high, low = self._state["max"], self._state["min"]
        for key in self.__keys:
            value = data[key]
            high[key] = max(high.get(key, value), value)
            low[key] = min(low.get(key, value), value)
        self._push_data(data)

    def summary(self) -> List[str]:
        '''
        Returns:
            The "max ..." and "min ..." comment lines of the tracked columns, empty before any row.
        '''
        lines = []
        for stat in ("max", "min"):
            values = self._state.get(stat) or {}
            if values:
                lines.append(stat + "".join(" {}={:.12e}".format(key, values[key]) for key in self.__keys))
        return lines

import numpy as np
import pytest

from powershift.models import CobbDouglas, Linear
from powershift.schemas.factors import FactorInputs
from powershift.schemas.policy import PolicySpec
from powershift.services.config_loader import DEFAULT_CONFIG_PATH

# Share of income paid to AGI under reference Cobb-Douglas elasticities at t=0 and t=T
CD_SHARE_START = 0.65 / 1.6
CD_SHARE_END = 1.6 / 2.55


@pytest.fixture
def unit_inputs():
    """All four factors at 1, knowledge stock 1"""
    return FactorInputs.unit()


@pytest.fixture
def reference_cobb_douglas():
    """Cobb-Douglas at the reference starting elasticities"""
    return CobbDouglas(A=1.8, alpha=0.55, beta=0.3, gamma=0.4, delta=0.35)


@pytest.fixture
def reference_linear():
    return Linear(a=1.0, b=1.3, c=1.0, d=1.0)


@pytest.fixture
def reference_policy():
    """Tax, dividend and cooperative ownership at their reference rates"""
    return PolicySpec(name="redistribution", proportional_tax=0.25, uad_rate=0.15, coop_share=0.20)


@pytest.fixture
def reference_config():
    return DEFAULT_CONFIG_PATH


@pytest.fixture
def random_points():
    """Log-uniform interior points over [0.1, 10]^4, fixed seed"""

    def _points(n: int, seed: int = 7):
        rng = np.random.default_rng(seed)
        values = np.exp(rng.uniform(np.log(0.1), np.log(10.0), size=(n, 4)))
        return [FactorInputs(L=v[0], L_agi=v[1], K=v[2], K_agi=v[3]) for v in values]

    return _points


@pytest.fixture
def write_config(tmp_path):
    """Write TOML text to a scenario file and return its path"""

    def _write(text: str, name: str = "scenario.toml"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write

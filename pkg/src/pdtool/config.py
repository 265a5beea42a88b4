import os
from dataclasses import dataclass, replace

BUDGET_ENV = "PDTOOL_BUDGET"


@dataclass(frozen=True)
class Config:
    order_cap: int = 200
    # nonzero entries allowed in a single bar differential
    matrix_budget: int = 5_000_000
    degree_cap: int = 8

    def with_overrides(self, **kwargs):
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def get_config():
    cfg = Config()
    env = os.environ.get(BUDGET_ENV)
    if env:
        cfg = replace(cfg, matrix_budget=int(env))
    return cfg

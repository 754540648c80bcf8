"""
Helpers for serializing and deserializing python types from JSON
"""

import json
import enum
import math
import dataclasses

import numpy as np


def finite(value):
    """
    Returns None for NaN and infinite floats so that JSON output stays strict.
    """
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return None
    return value


class Encoder(json.JSONEncoder):

    def default(self, o):
        if hasattr(o, "to_dict"):
            return o.to_dict()

        if dataclasses.is_dataclass(o):
            return dataclasses.asdict(o)

        if isinstance(o, enum.Enum):
            return o.value

        if isinstance(o, np.integer):
            return int(o)

        if isinstance(o, np.floating):
            return finite(o)

        if isinstance(o, np.ndarray):
            return o.tolist()

        return super(Encoder, self).default(o)


def dumps(obj, **kwargs) -> str:
    """
    Compact, key-order-stable JSON used for report lines.
    """
    kwargs.setdefault("cls", Encoder)
    kwargs.setdefault("separators", (",", ":"))
    kwargs.setdefault("allow_nan", False)
    return json.dumps(obj, **kwargs)

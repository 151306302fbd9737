"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Any, Dict, Iterable, Iterator, Type, TypeVar, cast
from pathlib import Path

import json

import jsons
import yaml

# type of a dataclass record
_TDatum = TypeVar("_TDatum")


def load_yaml(fname: Path) -> Dict[str, Any]:
    with open(fname, 'r') as f:
        config = yaml.load(f, Loader=yaml.SafeLoader)
    if config is None:
        return dict()
    if not isinstance(config, dict):
        raise ValueError(f"Config file {fname} must hold a key-value mapping")
    return config


def create_dir(dname: Path) -> Path:
    dname.mkdir(exist_ok=True, parents=True)
    return dname


def load_jsonl_file(data_jsonl: Path,
                    cls: Type[_TDatum]) -> Iterator[_TDatum]:
    """Loads a jsonl file and yield the deserialized dataclass objects."""
    with open(data_jsonl) as fp:
        for line in fp:
            if line.strip():
                yield jsons.loads(line.strip(), cls=cls)


def save_jsonl_file(data: Iterable[_TDatum], data_jsonl: Path) -> None:
    """Dumps dataclass objects into a jsonl file."""
    with open(data_jsonl, "w") as fp:
        for datum in data:
            datum_dict = cast(Dict[str, Any],
                              jsons.dump(datum, strip_privates=True))
            fp.write(json.dumps(datum_dict))
            fp.write("\n")

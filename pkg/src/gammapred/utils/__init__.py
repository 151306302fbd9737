"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Any, Mapping
from argparse import Namespace
from dataclasses import fields, is_dataclass
from enum import Enum

from .logging import logger


def format_value(value: Any) -> str:
    if value is None:
        return 'None'
    if isinstance(value, Enum):
        return str(value.name if not isinstance(value.value, str)
                   else value.value)
    if isinstance(value, float):
        return f"{value:g}"
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(format_value(v) for v in value) + ']'
    return str(value)


def pretty_print_mapping(values: Mapping[str, Any], spacing: int = 20,
                         indent: int = 0) -> None:
    pad = ' ' * indent
    for k, v in values.items():
        if is_dataclass(v) and not isinstance(v, type):
            logger.info(f"{pad}{k:{spacing}}|")
            pretty_print_mapping({f.name: getattr(v, f.name)
                                  for f in fields(v)},
                                 spacing=spacing - 4, indent=indent + 4)
        else:
            logger.info(f"{pad}{k:{spacing}}| {format_value(v)}")


def pretty_print_namespace(name: str, args: Namespace) -> None:
    """Log a command's arguments, the engine config expanded in place."""
    spacing = 30
    logger.info("=" * spacing * 2)
    logger.info(f"{name} args")
    logger.info("=" * spacing * 2)
    pretty_print_mapping(
        {k: v for k, v in vars(args).items() if k != 'command'},
        spacing=spacing)

"""Registry of CLI subcommands and the argument hooks attached to them."""

from argparse import ArgumentParser, Namespace
from dataclasses import dataclass
from typing import Callable

ArgumentHook = Callable[[ArgumentParser], None]
Runner = Callable[[Namespace], int]

# Hooks registered under this name are added to every subcommand.
SHARED = "shared"


@dataclass
class Command:
    name: str
    help: str
    runner: Runner


class CommandRegistry:
    """Collects subcommands and their argument hooks at import time."""

    commands: dict[str, Command] = {}
    hooks: dict[str, list[ArgumentHook]] = {}

    @classmethod
    def register_cli(cls, name: str) -> Callable[[ArgumentHook], ArgumentHook]:
        """Attach an argument hook to subcommand ``name`` (or to all of them with ``SHARED``)."""

        def decorator(func: ArgumentHook) -> ArgumentHook:
            cls.hooks.setdefault(name, []).append(func)
            return func

        return decorator

    @classmethod
    def register_command(cls, name: str, help: str) -> Callable[[Runner], Runner]:
        def decorator(func: Runner) -> Runner:
            cls.commands[name] = Command(name=name, help=help, runner=func)
            return func

        return decorator

    @classmethod
    def build_parser(cls, parser: ArgumentParser) -> ArgumentParser:
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
        for name, command in cls.commands.items():
            sub = subparsers.add_parser(name, help=command.help, description=command.help)
            for hook in cls.hooks.get(SHARED, []) + cls.hooks.get(name, []):
                hook(sub)
            sub.set_defaults(runner=command.runner)
        return parser

"""
Command modules; each one adds its subcommands through register()
"""
from simplegames.commands import decompose_commands, game_commands, search_commands, table_commands

COMMAND_MODULES = (game_commands, decompose_commands, search_commands, table_commands)


def register_all(subparsers) -> None:
    for module in COMMAND_MODULES:
        module.register(subparsers)

from .commands import cli, run

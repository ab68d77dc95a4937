"""Subcommando's; elke module heeft COMMAND, HELP, SYNOPSIS, add_arguments en handle."""

from . import acf, evaluate, featuremap, gradcheck, predict, search, sweep, synth, train

COMMANDS = {
    module.COMMAND: module
    for module in (synth, acf, train, evaluate, predict, featuremap, search, sweep, gradcheck)
}

__all__ = ["COMMANDS"]

# trigonal/cli/commands/__init__.py
"""Subcommands; each module exposes register() and run()"""
from trigonal.cli.commands import deform, dessin, enumerate, render, verify

COMMANDS = (dessin, enumerate, deform, render, verify)

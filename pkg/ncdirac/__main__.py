"""run the command line interface, see `ncdirac.cli`"""
from .cli import console_main

console_main()

"""Main entry point for running the braidmono CLI."""

from braidmono.cli import main

main()

from mcrhdc.cli.main import build_parser, main, parse_and_dispatch, resolve_config, run_experiment

__all__ = ["build_parser", "main", "parse_and_dispatch", "resolve_config", "run_experiment"]

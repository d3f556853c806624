# Allows running the CLI with 'python -m facewise' from the project root.
from .cli import run_cli

if __name__ == "__main__":
    run_cli()

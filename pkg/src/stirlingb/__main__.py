"""Entry point for running stirlingb as a module: python -m stirlingb"""

from stirlingb.cli import main

if __name__ == "__main__":
    main()

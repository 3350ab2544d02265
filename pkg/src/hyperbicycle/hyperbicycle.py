from hyperbicycle.cli import app as cli
from hyperbicycle.logging import log  # noqa


def main():
    log.info("Starting hyperbicycle...")
    cli()


if __name__ == "__main__":
    main()

import sys

from steaneChef.cli import cli


def main():
    return cli(prog_name="steanechef")


if __name__ == "__main__":
    sys.exit(main())

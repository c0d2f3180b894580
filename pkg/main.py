from dotenv import load_dotenv
from src.cli.commands import run
import sys


def main():
    """Main execution function"""

    # Load environment variables
    load_dotenv()

    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

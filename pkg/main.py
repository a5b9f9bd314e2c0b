"""Entry point for the rainbow command-line tool."""
import logging
import sys

from config.settings import settings

# Configure logging; stderr only so JSON on stdout stays clean
logging.basicConfig(
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    level=getattr(logging, settings.LOG_LEVEL, logging.INFO),
    stream=sys.stderr,
    force=True,
)

# Keep SQL echo out of verify --archive runs
logging.getLogger('sqlalchemy.engine').setLevel(logging.WARNING)
logging.getLogger('alembic').setLevel(logging.WARNING)

logger = logging.getLogger(__name__)

from cli.commands import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

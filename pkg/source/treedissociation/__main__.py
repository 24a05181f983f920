import sys

from treedissociation.cli.main import main

sys.exit(main())

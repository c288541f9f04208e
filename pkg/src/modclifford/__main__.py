from modclifford.cli import main
import sys
sys.exit(main())

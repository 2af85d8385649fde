from src.obstruction.cli import main

raise SystemExit(main())

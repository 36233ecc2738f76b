from vgraph.cli import main

main()

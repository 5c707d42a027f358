# Tests package for flop-verify

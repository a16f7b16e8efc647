# Tests for catsize

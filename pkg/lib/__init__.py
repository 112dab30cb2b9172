"""qecsa library: finite fields, codes, the N-sum box, protocol and verification."""

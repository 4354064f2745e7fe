"""Random generators, verification suites and conjecture scans."""

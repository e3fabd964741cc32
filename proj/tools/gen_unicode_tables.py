#!/usr/bin/env python3
"""Regenerates include/textclf/unicode_tables.hpp from Python's unicodedata.

Emits two tables:
  - kAlnumRanges: closed code-point ranges of categories Lu,Ll,Lt,Lm,Lo,Nd
  - kLowerDelta:  (code point, simple lowercase) pairs where they differ

Run from the repository root:  python3 tools/gen_unicode_tables.py
"""

import sys
import unicodedata

ALNUM_CATS = {"Lu", "Ll", "Lt", "Lm", "Lo", "Nd"}
MAX_CP = 0x110000


def alnum_ranges():
    ranges = []
    start = None
    for cp in range(MAX_CP):
        cat = unicodedata.category(chr(cp))
        if cat in ALNUM_CATS:
            if start is None:
                start = cp
        else:
            if start is not None:
                ranges.append((start, cp - 1))
                start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def lower_pairs():
    pairs = []
    for cp in range(MAX_CP):
        if unicodedata.category(chr(cp)) not in ALNUM_CATS:
            continue
        low = chr(cp).lower()
        # str.lower() is the full mapping; the single U+0130 multi-char case
        # reduces to its first scalar, which matches the simple mapping.
        lcp = ord(low[0])
        if lcp != cp:
            pairs.append((cp, lcp))
    return pairs


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "include/textclf/unicode_tables.hpp"
    ranges = alnum_ranges()
    pairs = lower_pairs()
    with open(out, "w", encoding="utf-8") as f:
        w = f.write
        w("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
          % unicodedata.unidata_version)
        w("#pragma once\n\n#include <cstdint>\n\n")
        w("namespace textclf::unicode_tables {\n\n")
        w("inline constexpr char kUnicodeVersion[] = \"%s\";\n\n" % unicodedata.unidata_version)
        w("// Closed ranges [lo, hi] of letter (L*) and decimal digit (Nd) code points.\n")
        w("inline constexpr std::uint32_t kAlnumRanges[][2] = {\n")
        for lo, hi in ranges:
            w("    {0x%X, 0x%X},\n" % (lo, hi))
        w("};\n\n")
        w("// (code point, simple lowercase) pairs, sorted by code point.\n")
        w("inline constexpr std::uint32_t kLowerDelta[][2] = {\n")
        for cp, lcp in pairs:
            w("    {0x%X, 0x%X},\n" % (cp, lcp))
        w("};\n\n")
        w("}  // namespace textclf::unicode_tables\n")
    print("wrote %s: %d ranges, %d lower pairs" % (out, len(ranges), len(pairs)))


if __name__ == "__main__":
    main()

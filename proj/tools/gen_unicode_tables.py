#!/usr/bin/env python3
"""Regenerate include/zhent/unicode_tables.hpp from Python's unicodedata.

Word characters are codepoints whose general category is a letter (L*),
a mark (M*), or a number (N*). The case-fold table is the simple 1:1
lowercase mapping (multi-character expansions are left unmapped).

Usage: python3 tools/gen_unicode_tables.py > include/zhent/unicode_tables.hpp
"""
import sys
import unicodedata

MAX_CP = 0x110000


def word_ranges():
    ranges = []
    start = None
    for cp in range(MAX_CP):
        cat = unicodedata.category(chr(cp))
        is_word = cat[0] in ("L", "M", "N")
        if is_word and start is None:
            start = cp
        elif not is_word and start is not None:
            ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def lower_pairs():
    pairs = []
    for cp in range(MAX_CP):
        low = chr(cp).lower()
        if len(low) == 1 and low != chr(cp):
            pairs.append((cp, ord(low)))
    return pairs


def main():
    ranges = word_ranges()
    pairs = lower_pairs()
    out = sys.stdout
    out.write("// Generated by tools/gen_unicode_tables.py -- do not edit.\n")
    out.write(f"// Unicode {unicodedata.unidata_version}, general categories L*, M*, N*.\n")
    out.write("#pragma once\n\n")
    out.write("#include <cstdint>\n\n")
    out.write("namespace zhent::detail {\n\n")
    out.write("struct CpRange { char32_t lo; char32_t hi; };\n")
    out.write("struct CpPair { char32_t from; char32_t to; };\n\n")
    out.write(f"inline constexpr CpRange kWordRanges[{len(ranges)}] = {{\n")
    for i in range(0, len(ranges), 4):
        row = ", ".join(f"{{0x{lo:X}, 0x{hi:X}}}" for lo, hi in ranges[i:i + 4])
        out.write(f"    {row},\n")
    out.write("};\n\n")
    out.write(f"inline constexpr CpPair kLowerPairs[{len(pairs)}] = {{\n")
    for i in range(0, len(pairs), 6):
        row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in pairs[i:i + 6])
        out.write(f"    {row},\n")
    out.write("};\n\n")
    out.write("}  // namespace zhent::detail\n")


if __name__ == "__main__":
    main()

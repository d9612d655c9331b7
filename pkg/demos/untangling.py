"""Reversal untangling and touch curves."""

from __future__ import annotations

# %%
from gaussdiag import parse_code
from gaussdiag.criteria import check_dehn, check_touch, dehn_transform

code = parse_code("1234512543")

# %% One pass: for each symbol in turn, reverse the stretch between its two copies.
result = dehn_transform(code)
for step, word in enumerate(result.format_trace()):
    print(step, word)

# %% The transformed word is touch-realizable exactly when the original is realizable.
print(check_touch(result.code).detail)
print(check_dehn(code).verdict)

# %% A triangle of interlaced chords cannot be drawn with tangencies only.
print(check_touch(parse_code("123123")).detail)
print(check_touch(parse_code("121323")).detail)

"""Exact arithmetic for surreal numbers.

Modules:
  ordinals    ordinal arithmetic below epsilon_0 (Cantor normal form)
  games       finite game forms, the dyadic tier, birthdays
  normalform  Conway normal forms with rational coefficients
  explog      exponentials and logarithms via truncated series
  trig        sine/cosine extensions, complex pairs, winding diagnostics
  sequences   symbolic ordinal-indexed sequences, limits, sections
  cli         the calculator front end
"""

"""A tour of the magic function g and its Fourier transform ghat.

Prints the defining special values, walks the ladder of zeros at sqrt(2n),
verifies the sign conditions on a sample grid, and (if matplotlib is
available) saves a plot of both functions to magic_function.png.
"""

import math

import numpy as np

from e8magic import eval_a, eval_b, eval_g, eval_g_deriv

SQRT2 = math.sqrt(2.0)


def main() -> None:
    print("== normalization ==")
    g0 = eval_g(0.0, "g")
    h0 = eval_g(0.0, "ghat")
    print(f"g(0)    = {g0.value:.15f}  (+/- {g0.err:.1e})")
    print(f"ghat(0) = {h0.value:.15f}  (+/- {h0.err:.1e})")

    print("\n== building blocks: a and b on the imaginary axis ==")
    a0 = eval_a(0.0)
    print(f"Im a(0)      = {a0.value:.10f}   reference -8640/pi = {-8640 / math.pi:.10f}")
    print(f"Im b(0)      = {eval_b(0.0).value:+.3e}   (vanishes)")
    print(f"Im b(sqrt2)  = {eval_b(SQRT2).value:+.3e}   (vanishes)")

    print("\n== the ladder of zeros at r = sqrt(2n) ==")
    print(" n   r=sqrt(2n)      g(r)          ghat(r)       g'(r)")
    for n in range(1, 7):
        r = math.sqrt(2 * n)
        g = eval_g(r, "g").value
        h = eval_g(r, "ghat").value
        d = eval_g_deriv(r, "g").value
        note = "simple zero of g" if n == 1 else "double zero"
        print(f"{n:2d}   {r:.6f}   {g:+.3e}   {h:+.3e}   {d:+.3e}   {note}")
    print(f"\ng'(sqrt2) reference: -sqrt2/60 = {-SQRT2 / 60:.15f}")
    print(f"g'(sqrt2) computed:             {eval_g_deriv(SQRT2, 'g').value:.15f}")

    print("\n== sign conditions (the Cohn-Elkies hypotheses) ==")
    rs = np.linspace(0.05, 4.0, 200)
    worst_g = max(eval_g(float(r), "g").value for r in rs if r >= SQRT2)
    worst_h = min(eval_g(float(r), "ghat").value for r in rs if r > 0)
    print(f"max g(r) on [sqrt2, 4]: {worst_g:+.3e}   (must be <= 0)")
    print(f"min ghat(r) on (0, 4]:  {worst_h:+.3e}   (must be >= 0)")

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(8, 4.5))
        gs = [eval_g(float(r), "g").value for r in rs]
        hs = [eval_g(float(r), "ghat").value for r in rs]
        ax.plot(rs, gs, label="g(r)")
        ax.plot(rs, hs, label="ghat(r)")
        for n in range(1, 7):
            ax.axvline(math.sqrt(2 * n), color="gray", lw=0.5, ls=":")
        ax.axhline(0.0, color="black", lw=0.5)
        ax.set_xlabel("r")
        ax.set_ylim(-0.1, 1.05)
        ax.legend()
        ax.set_title("The magic function and its Fourier transform")
        fig.tight_layout()
        fig.savefig("magic_function.png", dpi=150)
        print("\nwrote magic_function.png")
    except ImportError:
        print("\n(matplotlib not available; skipping the plot)")


if __name__ == "__main__":
    main()

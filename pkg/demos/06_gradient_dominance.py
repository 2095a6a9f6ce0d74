"""Why parallel slots chase the same component: gradient alignment.

Tokens built from two additive components with amplitude ratio A1/A2 give
attention gradients whose direction is dominated by the stronger
component's key direction once the ratio is large; depleting the dominant
peak token removes that pull for the next slot.
"""
from slotbench.harness import dominance_report_rows, gradient_dominance_check


def main() -> None:
    results = gradient_dominance_check(
        ratios=(1.0, 2.0, 5.0, 20.0, 100.0), trials=100, seed=0)
    print(f"{'A1/A2':>7} {'cos(grad, dominant)':>21} {'cos(grad, weak)':>17} "
          f"{'after depletion':>17}")
    for row in dominance_report_rows(results):
        print(f"{row['ratio']:>7g} {row['cos_dominant_mean']:>21.4f} "
              f"{row['cos_weak_mean']:>17.4f} "
              f"{row['cos_dominant_depleted_mean']:>17.4f}")
    print("\nAt high ratios the gradient is pinned to the dominant "
          "direction; evidence depletion flips it away.")


if __name__ == "__main__":
    main()

"""Run one mixture through all four attention mechanisms and compare.

The mechanisms share the same projections and GRU+MLP update stack; only
the competition axis and the residual state differ:

  vanilla     softmax over slots (columns sum to 1), all slots parallel
  sequential  softmax over tokens (rows sum to 1), slots one at a time
  evidence    sequential + per-token evidence that decays after each slot
  dataspace   sequential, but the tokens themselves are depleted
"""
import numpy as np

from slotbench.attention import SlotConfig, slot_forward
from slotbench.config import ExperimentConfig
from slotbench.signals import make_dataset
from slotbench.tokenizer import tokenize
from slotbench.training import build_model


def show_attention(name, state):
    attn = state.attention.data[0]
    axis = "columns" if name == "vanilla" else "rows"
    total = attn.sum(axis=0) if name == "vanilla" else attn.sum(axis=1)
    print(f"\n== {name} (stochastic {axis}, max dev "
          f"{np.abs(total - 1).max():.1e})")
    print("   peak token per slot:", np.argmax(attn, axis=1).tolist())
    if name == "evidence":
        print("   final evidence:", np.round(state.evidence.data[0], 3))


def main() -> None:
    cfg = ExperimentConfig(task="multiscale")
    ds = make_dataset(cfg.task, 1, seed=7)
    store = build_model(cfg, seed=0)
    print(f"model has {store.n_parameters()} parameters; "
          f"K={ds.k[0]} sources in the demo mixture")
    tokens = tokenize(store, ds.signals, cfg.n_tokens)
    for mechanism in ("vanilla", "sequential", "evidence", "dataspace"):
        slot_cfg = SlotConfig(mechanism=mechanism, d=cfg.d,
                              ordering="canonical")
        state = slot_forward(store, tokens, slot_cfg,
                             np.random.default_rng(3))
        show_attention(mechanism, state)
    print("\n(untrained weights: the contrast in peak collisions only "
          "emerges after training; see 05_train_one_run.py)")


if __name__ == "__main__":
    main()

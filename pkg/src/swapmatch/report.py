"""Figure rendering for benchmark output.

Uses the Agg backend directly so reports render in headless runs; one
grouped bar chart of per-byte cost, annotated with the factor counts
that explain the encoded engine's word budget.
"""

from __future__ import annotations


def render_bench_figure(records, path: str) -> None:
    """Write a throughput comparison chart for `run_bench` records."""
    from matplotlib.figure import Figure
    from matplotlib.backends.backend_agg import FigureCanvasAgg

    patterns = []
    for r in records:
        key = (r.m, r.sigma, r.k, r.k_prime)
        if key not in patterns:
            patterns.append(key)
    engines = []
    for r in records:
        if r.engine not in engines:
            engines.append(r.engine)
    by_cell = {(r.engine, (r.m, r.sigma, r.k, r.k_prime)): r for r in records}

    fig = Figure(figsize=(1.8 + 1.6 * len(patterns), 4.2))
    ax = fig.add_subplot(111)
    width = 0.8 / max(1, len(engines))
    for ei, engine in enumerate(engines):
        xs, ys = [], []
        for pi, key in enumerate(patterns):
            rec = by_cell.get((engine, key))
            if rec is None:
                continue
            xs.append(pi + ei * width)
            ys.append(rec.ns_per_byte)
        ax.bar(xs, ys, width=width * 0.92, label=engine)
    ax.set_xticks([pi + width * (len(engines) - 1) / 2 for pi in range(len(patterns))])
    ax.set_xticklabels([f"m={m}\nsigma={s}\nk={k}, k'={kp}"
                        for m, s, k, kp in patterns], fontsize=8)
    ax.set_ylabel("ns per byte (best of repeats)")
    ax.set_title("search cost by engine")
    ax.grid(axis="y", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    FigureCanvasAgg(fig).print_figure(path, dpi=150)

"""Instance-file generation: deterministic matrices and vector pairs in
the text formats the library reads back bit-exactly."""

from __future__ import annotations

from pathlib import Path

from ..bitcore import matrix_to_text, vector_to_text
from .campaign import Campaign, random_matrix, random_pairs, trial_rng


def generate_files(campaign: Campaign, out_dir: Path) -> list[Path]:
    """One matrix file plus per-round u/v vector files per (size, trial),
    named by seed, shape, and trial; returns the written paths."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for size in campaign.sizes:
        n1, n2, n3 = size
        for trial in range(campaign.trials):
            rng = trial_rng(campaign, "gen", size, trial)
            matrix = random_matrix(rng, n1, n2, campaign.density)
            pairs = random_pairs(rng, n1, n2, n3, campaign.density)
            stem = f"s{campaign.seed}_{n1}x{n2}x{n3}_t{trial}"
            mpath = out_dir / f"{stem}_matrix.txt"
            mpath.write_text(matrix_to_text(matrix))
            written.append(mpath)
            for r, (u, v) in enumerate(pairs):
                upath = out_dir / f"{stem}_r{r}_u.txt"
                vpath = out_dir / f"{stem}_r{r}_v.txt"
                upath.write_text(vector_to_text(u))
                vpath.write_text(vector_to_text(v))
                written.extend((upath, vpath))
    manifest = out_dir / f"s{campaign.seed}_manifest.txt"
    manifest.write_text("\n".join(p.name for p in written) + "\n")
    written.append(manifest)
    return written

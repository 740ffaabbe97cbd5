"""
Script to dump every ipsodual game on up to six voters as JSON lines
Run this to regenerate the census file after changing the search code
"""
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from pathlib import Path
from simplegames.schemas.census_schema import CensusRecord
from simplegames.services.search_engine import SearchEngine
import logging

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def dump_census(path: Path, n_max: int = 6, threads: int = 1) -> dict[int, int]:
    """Write one CensusRecord per game; returns the game count per n"""
    engine = SearchEngine(threads=threads)
    counts = {}

    with path.open("w", encoding="utf-8") as out:
        for n in range(1, n_max + 1):
            logger.info(f"Computing census entries for {n} voters")

            def progress(done: int) -> None:
                if done % 500 == 0:
                    logger.info(f"  {done} games done")

            entries = engine.census_entries(n, progress=progress)
            for entry in entries:
                record = CensusRecord(
                    n=n,
                    mask_hex=entry.game.to_hex(),
                    weight=entry.weight,
                    depth=entry.depth,
                    quota=entry.quota,
                    transitive=entry.transitive,
                    canonical=entry.canonical,
                )
                out.write(record.model_dump_json() + "\n")
            counts[n] = len(entries)
            logger.info(f"✓ {len(entries)} games on {n} voters")

    logger.info(f"""
    ========================================
    Census Dump Complete
    ========================================
    File: {path}
    Games per n: {counts}
    Total: {sum(counts.values())}
    ========================================
    """)
    return counts


if __name__ == "__main__":
    # Output path and largest n can be passed as arguments
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("census.jsonl")
    largest = int(sys.argv[2]) if len(sys.argv) > 2 else 6
    logger.info(f"Writing census to: {target}")

    dump_census(target, n_max=largest)

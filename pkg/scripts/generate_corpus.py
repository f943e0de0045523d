from doodlinv.corpus import corpus_generate
from doodlinv.paths import get_paths, load_run_config

config = load_run_config()
if __name__ == '__main__':
    for seed in range(config.seed, config.seed + 4):
        save_dir = get_paths().corpus/f'seed_{seed}'
        if not (save_dir/'manifest.parquet').exists():
            corpus_generate(
                items=config.corpus['items'], max_crossings=config.corpus['max_crossings'],
                trace_length=config.corpus['trace_length'], seed=seed, save_dir=save_dir,
                num_proc=config.num_proc, verbose=True
            )

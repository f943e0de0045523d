from doodlinv.moves.merkov import merkov_search
from doodlinv._tools import printdf, time_elapsed, tt
from doodlinv.paths import get_paths, load_run_config

config = load_run_config()
if __name__ == '__main__':
    for restart in range(config.search['restarts']):
        s = tt()
        seed = config.seed + restart
        save_path = get_paths().reports/f'merkov_seed_{seed}.parquet'
        if save_path.exists():
            continue
        print(f'Working on seed {seed} ({restart + 1}/{config.search["restarts"]})')
        table = merkov_search(budget=config.search['budget'], seed=seed, verbose=True)
        printdf(table)
        table.to_parquet(save_path, engine='pyarrow', index=False)
        if table.reached_circle.all():
            print('every candidate reached the circle')
            break
        time_elapsed(s)

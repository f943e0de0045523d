from doodlinv.blocks.census import census, CENSUS_CONTEXTS
from doodlinv._tools import printdf, time_elapsed, tt
from doodlinv.paths import get_paths, save_yaml

save_dir = get_paths().reports
if __name__ == '__main__':
    for context in CENSUS_CONTEXTS:
        s = tt()
        print(f'Working on {context}')
        for ring in (0, 2):
            save_path = save_dir/f'census_{context}_{"Z" if ring == 0 else f"Z{ring}"}.yaml'
            if not save_path.exists():
                report = census(context, ring=ring, verbose=True)
                printdf(report.table)
                save_yaml(save_path, report.to_dict())
        time_elapsed(s)
        print('\n'*2)

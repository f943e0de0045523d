from doodlinv.blocks.block import BlockDescriptor, BlockHomology, block, block_top_homology
from doodlinv.blocks.column import ColumnReport, auxiliary_column, column_complex, column_classes
from doodlinv.blocks.census import CensusReport, census

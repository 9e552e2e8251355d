#pragma once

// Umbrella header: the whole library in one include.

#include "scramblelab/approx.hpp"
#include "scramblelab/bits.hpp"
#include "scramblelab/budgets.hpp"
#include "scramblelab/chipfiring.hpp"
#include "scramblelab/congestion.hpp"
#include "scramblelab/corpus.hpp"
#include "scramblelab/errors.hpp"
#include "scramblelab/families.hpp"
#include "scramblelab/flow.hpp"
#include "scramblelab/hitting.hpp"
#include "scramblelab/io.hpp"
#include "scramblelab/multigraph.hpp"
#include "scramblelab/params.hpp"
#include "scramblelab/scramble.hpp"
#include "scramblelab/search.hpp"
#include "scramblelab/subgraphs.hpp"
#include "scramblelab/suites.hpp"
#include "scramblelab/treecut.hpp"
#include "scramblelab/treewidth.hpp"

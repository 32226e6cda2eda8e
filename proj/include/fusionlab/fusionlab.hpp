// Umbrella header.
#pragma once

#include "fusionlab/char_subgroups.hpp"
#include "fusionlab/context.hpp"
#include "fusionlab/corpus.hpp"
#include "fusionlab/elemset.hpp"
#include "fusionlab/error.hpp"
#include "fusionlab/fusion.hpp"
#include "fusionlab/group.hpp"
#include "fusionlab/lattice.hpp"
#include "fusionlab/perm.hpp"
#include "fusionlab/props.hpp"
#include "fusionlab/report.hpp"
#include "fusionlab/supplements.hpp"
#include "fusionlab/theorems.hpp"

#pragma once

#include "posetcat/error.hpp"
#include "posetcat/delta.hpp"
#include "posetcat/poset.hpp"
#include "posetcat/corpus.hpp"
#include "posetcat/colimit.hpp"
#include "posetcat/delta_diagrams.hpp"
#include "posetcat/simplicial.hpp"
#include "posetcat/comma.hpp"
#include "posetcat/continuity.hpp"
#include "posetcat/kan_extension.hpp"
#include "posetcat/text_format.hpp"

#pragma once

#include "wordsep/afa.hpp"
#include "wordsep/baseline.hpp"
#include "wordsep/error.hpp"
#include "wordsep/exactnum.hpp"
#include "wordsep/freegroup.hpp"
#include "wordsep/mcqfa.hpp"
#include "wordsep/separation.hpp"
#include "wordsep/serialize.hpp"
#include "wordsep/wordmap.hpp"
#include "wordsep/words.hpp"

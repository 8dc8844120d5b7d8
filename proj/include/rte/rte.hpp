#pragma once

#include "rte/fole/aliases.hpp"
#include "rte/fole/axiom.hpp"
#include "rte/fole/clause.hpp"
#include "rte/fole/cnf.hpp"
#include "rte/fole/formula.hpp"
#include "rte/fole/parser.hpp"
#include "rte/fole/predicate.hpp"
#include "rte/fole/problem.hpp"
#include "rte/fole/render.hpp"
#include "rte/fole/term.hpp"

#include "rte/reasoner/check_sat.hpp"
#include "rte/reasoner/clause_export.hpp"
#include "rte/reasoner/config.hpp"
#include "rte/reasoner/model.hpp"
#include "rte/reasoner/model_builder.hpp"
#include "rte/reasoner/proof_check.hpp"
#include "rte/reasoner/prover.hpp"
#include "rte/reasoner/sat_result.hpp"
#include "rte/reasoner/unify.hpp"

#include "rte/engine/classify.hpp"

#include "rte/kgraph/axioms.hpp"
#include "rte/kgraph/graph.hpp"
#include "rte/kgraph/tree.hpp"

#include "rte/ontology/phase1.hpp"
#include "rte/ontology/pipeline.hpp"
#include "rte/ontology/store.hpp"
#include "rte/ontology/yago.hpp"

#include "rte/presup/lambda.hpp"
#include "rte/presup/store.hpp"

; transfer loop: x picks up what y drains, sum stays 5
(declare-var x Int)
(declare-var y Int)
(init (and (= x 0) (= y 5)))
(trans (or (and (> y 0) (= x' (+ x 1)) (= y' (- y 1)))
           (and (<= y 0) (= x' x) (= y' y))))
(good (= (+ x y) 5))

package com.acme.report1;

import java.util.Map;

public class RouteBuilder {
    private Map<String, String> cache;
    private int chunkHint;
    private static final int LIMIT = 31;

    public int mergeHeader(int pathA) {
        int index = pathA * 2;
        return pathA + 1;
    }

    public Integer renderKey(int indexA) {
        Integer record = new Integer(indexA);
        return record;
    }

    public void computeRecord(int resultA) {
        this.chunkHint = resultA;
    }

    public Integer formatHeader(int indexA) {
        Integer chunk = new Integer(indexA);
        return chunk;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}

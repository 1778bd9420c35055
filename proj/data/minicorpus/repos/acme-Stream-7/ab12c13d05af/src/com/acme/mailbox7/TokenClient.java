package com.acme.mailbox7;

import java.util.Map;

public class TokenClient {
    private Map<String, String> cache;
    private int chunkHint;
    private static final int LIMIT = 118;

    public Integer formatPath(int labelA) {
        Integer entry = new Integer(labelA);
        return entry;
    }

    public int updateItem(int countA) {
        int header = countA * 6;
        return countA + 1;
    }

    public void scanCount(int indexA) {
        this.chunkHint = indexA;
    }

    public String scanPayload(String entryA) {
        String limit = entryA.toLowerCase();
        limit.isEmpty();
        return limit;
    }

    public double renderLabel(int labelA, int payloadB) {
        double limit = labelA / payloadB;
        return limit;
    }

    public int computePath(String bufferA) {
        return bufferA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
